#pragma once

// Reconstruction of a lattice polytope from a balanced codimension-one
// weighted fan. The vertex oracle shoots the ray w + t*e_i for t > 0 and
// accumulates, per maximal cone met in its relative interior, the cone
// multiplicity times the absolute i-th coordinate of the primitive normal
// of the cone's span. The resulting polytope sits in the positive orthant
// and touches every coordinate hyperplane.

#include "tropimp/fan.hpp"
#include "tropimp/polytope.hpp"

namespace tropimp {

struct non_generic_direction : computation_error {
  using computation_error::computation_error;
};

// Vertex of the dual polytope in direction w. Requires w outside the fan
// support with all ray crossings in relative interiors of maximal cones;
// throws non_generic_direction otherwise (callers perturb and retry).
IVec vertex_oracle(const WeightedFan& fan, const QVec& w);

Polytope reconstruct_polytope(const WeightedFan& fan, int threads = 1);

}  // namespace tropimp
