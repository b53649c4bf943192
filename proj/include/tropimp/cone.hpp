#pragma once

// Polyhedral cones through the origin: V-representation (primitive rays plus
// a lineality basis), H-representation (facet functionals plus span
// equations), and exact conversions/intersections built on the double
// description kernel.

#include "tropimp/dd.hpp"

namespace tropimp {

struct Cone {
  int ambient = 0;
  std::vector<IVec> rays;  // primitive, lex-sorted
  IMat lineality;          // saturated canonical basis, usually empty
};

struct ConeHRep {
  IMat ineqs;  // u . y >= 0 on the cone
  IMat eqs;    // e . y == 0 on the cone (span equations)
};

struct ConeData {
  Cone cone;
  ConeHRep hrep;
  int dim = 0;
};

// Extreme-ray form of the cone generated by `gens` (vectors may be redundant,
// zero, or contain opposite pairs; lineality is detected).
ConeData cone_from_generators(int ambient, const IMat& gens);

// H-representation of a cone given by extreme rays and lineality.
ConeHRep cone_hrep(const Cone& c);

int cone_dim(const Cone& c);

bool cone_contains(const ConeHRep& h, const IVec& x);
bool cone_contains(const ConeHRep& h, const QVec& x);

// x satisfies all inequalities strictly and all equations exactly.
bool cone_contains_in_relative_interior(const ConeHRep& h, const QVec& x);

Cone cone_intersect(int ambient, const ConeHRep& a, const ConeHRep& b);

// A point in the relative interior (the sum of the rays plus nothing from the
// lineality part; for the zero cone this is the origin).
IVec cone_interior_point(const Cone& c);

}  // namespace tropimp
