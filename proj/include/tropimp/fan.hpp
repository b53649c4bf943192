#pragma once

// Pure-dimensional weighted polyhedral fans: canonical storage, the
// balancing condition check, and the textual fan format
// (AMBIENT_DIM / DIM / RAYS / MAXIMAL_CONES / MULTIPLICITIES).

#include <iosfwd>

#include "tropimp/cone.hpp"

namespace tropimp {

struct WeightedFan {
  int ambient = 0;
  int dim = 0;
  std::vector<IVec> rays;              // primitive, lex-sorted, unique
  std::vector<std::vector<int>> cones; // sorted ray index sets, lex-sorted
  std::vector<Int> multiplicities;     // one per cone, >= 1

  Cone cone_at(int i) const;
};

// Builds a fan in canonical form from explicit cones; validates purity and
// positive multiplicities.
WeightedFan make_fan(int ambient, int dim,
                     const std::vector<std::vector<IVec>>& cone_rays,
                     const std::vector<Int>& multiplicities);

struct BalanceReport {
  bool balanced = true;
  std::string message;            // empty when balanced
  std::vector<IVec> ridge_rays;   // offending ridge when not balanced
};

// Checks the balancing condition: at every ridge the multiplicity-weighted
// primitive quotient generators of the adjacent maximal cones must sum into
// the ridge's span lattice.
BalanceReport check_balancing(const WeightedFan& fan);

WeightedFan read_fan(std::istream& in);
void write_fan(std::ostream& out, const WeightedFan& fan);
std::string fan_to_string(const WeightedFan& fan);
WeightedFan fan_from_string(const std::string& text);

}  // namespace tropimp
