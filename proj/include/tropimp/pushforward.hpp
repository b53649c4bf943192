#pragma once

// Image of a weighted fan under an integer linear map. The image cones are
// grouped by their span and refined by the arrangement of all facet
// hyperplanes occurring in a group, so that every refined cone lies inside
// or outside each image cone. Multiplicities follow the fiber-sum formula:
// each source cone whose image contains a refined cone contributes its
// multiplicity times the index of the image of its span lattice, and the
// total is divided by the map degree delta.

#include "tropimp/fan.hpp"
#include "tropimp/poly_io.hpp"

namespace tropimp {

WeightedFan push_forward(const WeightedFan& fan, const MonomialMap& map,
                         const Int& delta = 1, int threads = 1);

}  // namespace tropimp
