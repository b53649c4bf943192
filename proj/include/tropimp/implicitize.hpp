#pragma once

// End-to-end implicitization: from a parametrization by n Laurent
// polynomials in n-1 unknowns, build the graph system in 2n-1 unknowns,
// tropicalize it, push it forward along the coordinate projection, and
// reconstruct the Newton polytope of the implicit equation.
//
// Coefficients are assumed generic throughout; the projection degree
// defaults to one (the parametrization is birational onto its image for
// generic coefficients) and can be overridden.

#include "tropimp/poly_io.hpp"
#include "tropimp/polytope.hpp"

namespace tropimp {

struct GraphSystem {
  PolynomialSystem system;  // n supports in 2n-1 variables
  MonomialMap map;          // the n x (2n-1) projection (0 | I)
};

GraphSystem build_graph_system(const PolynomialSystem& parametrization);

struct ImplicitizationResult {
  Polytope newton;
  long long lattice_point_count = 0;
  Int degree;  // max vertex coordinate sum of the canonically placed polytope
};

ImplicitizationResult implicitize(const PolynomialSystem& parametrization,
                                  const Int& delta = 1, int threads = 1);

Int newton_degree(const Polytope& p);

}  // namespace tropimp
