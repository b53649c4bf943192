#pragma once

// Exact convex polytopes over Q: irredundant V- and H-representations via
// the double description method on the homogenization cone, face lattice
// walks from vertex-facet incidences, Minkowski sums, normal fan skeletons,
// lattice point enumeration, and lattice-normalized (mixed) volumes.

#include "tropimp/cone.hpp"

namespace tropimp {

struct Halfspace {
  Int a0;  // a0 + a . x >= 0 on the polytope; a is primitive
  IVec a;
};

struct AffineEquation {
  Int c0;  // c0 + c . x == 0 on the polytope
  IVec c;
};

struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<QVec> vertices;            // extreme points, lex-sorted
  std::vector<Halfspace> facets;         // irredundant, canonical order
  std::vector<AffineEquation> equations; // affine hull, canonical basis
  std::vector<Bitset> facet_vertices;    // per facet: incident vertices

  bool contains(const QVec& x) const;
  bool is_lattice_polytope() const;
  // Integer vertex rows; rejects non-integral vertices.
  std::vector<IVec> integer_vertices() const;
};

Polytope convex_hull(int ambient, const std::vector<QVec>& points);
Polytope convex_hull(int ambient, const std::vector<IVec>& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// Face minimizing w . x (inner-normal convention used project-wide).
Polytope face_in_direction(const Polytope& p, const QVec& w);
// Just the minimizing vertex set, as indices into p.vertices.
std::vector<int> face_vertices_in_direction(const Polytope& p, const QVec& w);

struct FaceData {
  Bitset verts;
  Bitset facets;
  int dim = 0;
};

// All proper nonempty faces of dimension >= min_dim (vertices up to facets);
// the polytope itself is not included.
std::vector<FaceData> enumerate_faces(const Polytope& p, int min_dim);

// Number of faces in each dimension 0 .. dim-1.
std::vector<long long> f_vector(const Polytope& p);

struct SkeletonCone {
  Cone cone;  // inner normal cone, rays are primitive facet normals
  IVec rep;   // relative interior point (sum of the rays)
  std::vector<int> dual_face;  // vertex indices of the face dual to the cone
};

// All d-dimensional cones of the inner normal fan of a full-dimensional
// polytope, each with a relative interior representative.
std::vector<SkeletonCone> normal_fan_skeleton(const Polytope& p, int d);

std::vector<IVec> lattice_points(const Polytope& p);
long long count_lattice_points(const Polytope& p);

// Volume of p in coordinates of the lattice basis, scaled by dim! so that a
// unit simplex on lattice basis vectors has volume one. The affine hull of p
// must be parallel to the span of the basis.
Rat normalized_volume(const Polytope& p, const IMat& lattice_basis);

// Lattice-normalized mixed volume of c polytopes in R^c (inclusion-exclusion
// over subset Minkowski sums).
Int mixed_volume(const std::vector<Polytope>& polytopes);

}  // namespace tropimp
