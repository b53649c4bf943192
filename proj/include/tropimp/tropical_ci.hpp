#pragma once

// Weighted tropical variety of a generic complete intersection, computed
// combinatorially from the Newton polytopes of the system: the (p-c)-cones
// of the inner normal fan of the Minkowski sum whose face tuples have
// positive mixed volume, weighted by that mixed volume. When the number of
// polynomials equals the number of variables the result degenerates to the
// mixed volume itself.

#include "tropimp/fan.hpp"
#include "tropimp/poly_io.hpp"

namespace tropimp {

struct TropicalResult {
  bool is_mixed_volume = false;
  Int mixed_volume_value = 0;
  WeightedFan fan;  // meaningful iff !is_mixed_volume
};

TropicalResult tropical_complete_intersection(const PolynomialSystem& system,
                                              int threads = 1);

}  // namespace tropimp
