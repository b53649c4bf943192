#pragma once

// Textual input formats: bracketed Laurent polynomial systems and
// LINEAR_MAP matrices, plus serialization of systems and of polytopes in
// the VERTICES / FACETS / N_LATTICE_POINTS block format.
//
// Coefficients in the polynomial format are parsed and then DISCARDED: only
// supports (sets of exponent vectors) are kept, since all coefficients are
// assumed generic. `2*x` and `x` therefore produce identical supports, and
// `x + x` collapses to a single exponent vector.

#include "tropimp/polytope.hpp"

namespace tropimp {

struct parse_error : input_error {
  parse_error(const std::string& msg, int line, int col)
      : input_error(msg + " (line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct PolynomialSystem {
  std::vector<std::string> variables;
  // One support per polynomial: sorted sets of exponent vectors, each of
  // length variables.size().
  std::vector<std::vector<IVec>> supports;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_polynomials() const { return static_cast<int>(supports.size()); }
};

struct MonomialMap {
  IMat matrix;  // rows are linearly independent over Q

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
};

PolynomialSystem parse_system(const std::string& text);
std::string serialize_system(const PolynomialSystem& system);

MonomialMap parse_linear_map(const std::string& text);
std::string serialize_linear_map(const MonomialMap& map);

struct PolytopeWriteOptions {
  bool with_lattice_count = true;
  bool with_degree = false;  // max vertex coordinate sum, printed after the count
};

std::string write_polytope(const Polytope& p, const PolytopeWriteOptions& opts = {});

}  // namespace tropimp
