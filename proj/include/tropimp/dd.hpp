#pragma once

// Double description method for polyhedral cones over exact integers.
// Given inequality rows a with constraints a . y >= 0, produces the
// generator description of the cone: a lineality basis plus the extreme
// rays, each ray carrying the set of inequalities it satisfies with
// equality. This single primitive backs convex hulls (via homogenization),
// H<->V conversions of cones, and cone intersections.

#include <boost/dynamic_bitset.hpp>

#include "tropimp/numeric.hpp"

namespace tropimp {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct DDRay {
  IVec v;        // primitive integer direction
  Bitset tight;  // inequalities satisfied with equality (indexed as given)
};

struct GeneratorDescription {
  std::vector<IVec> lineality;  // basis of the lineality space (may be empty)
  std::vector<DDRay> rays;      // extreme rays modulo lineality
};

// Extreme generator description of { y in R^dim : row . y >= 0 for all rows }.
GeneratorDescription dual_description(int dim, const std::vector<IVec>& rows);

}  // namespace tropimp
