#pragma once

// Exact integer lattice algebra: Hermite normal form with unimodular
// transform, primitive vectors, integer kernels, saturations of spans in Z^p
// and indices of finite-index sublattices. This is the arithmetic backbone
// for multiplicities; everything is exact.

#include "tropimp/numeric.hpp"

namespace tropimp {

// gcd of the entries, always >= 0 (0 only for the zero vector).
Int content(const IVec& v);

// v divided by the (positive) gcd of its entries; the direction is kept.
// The zero vector is rejected.
IVec primitive(const IVec& v);

struct HnfResult {
  IMat h;  // row-style Hermite normal form of the input
  IMat u;  // unimodular, u * m == h
};

// Row-style HNF. Convention fixed for the whole project: echelon shape with
// pivots positive, entries above each pivot reduced into [0, pivot), zero
// rows at the bottom. Downstream canonical forms depend on this choice.
HnfResult hermite_normal_form(const IMat& m);

// Shape predicate for the convention above (used by tests and assertions).
bool is_hnf(const IMat& h);

// Basis of { z in Z^p : m * z = 0 }. The result is a saturated lattice.
IMat integer_kernel(const IMat& m, int cols);

// Basis of span_Q(rows) intersected with Z^p, i.e. the saturation of the
// lattice generated by the rows. Rejects all-zero input.
IMat saturated_span_lattice(const IMat& rows, int ambient);

// Index [L(target) : L(sub)] where both lattices must span the same rational
// subspace and sub must generate a sublattice of the lattice spanned by
// target. Errors otherwise.
Int lattice_index(const IMat& target, const IMat& sub);

// Some y with phi . y == 1; phi must be primitive.
IVec solve_unit(const IVec& phi);

}  // namespace tropimp
