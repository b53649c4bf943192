#include <doctest.h>

#include <set>

#include "test_helpers.hpp"
#include "tropimp/reconstruct.hpp"
#include "tropimp/tropical_ci.hpp"

using namespace tropimp;
using tth::im;
using tth::iv;
using tth::qv;

namespace {

std::set<IVec> vertex_set(const Polytope& p) {
  std::set<IVec> out;
  for (const auto& v : p.integer_vertices()) out.insert(v);
  return out;
}

Polytope canonical_translate(const Polytope& p) {
  std::vector<QVec> moved;
  QVec shift(p.ambient);
  for (int i = 0; i < p.ambient; ++i) {
    Rat mn = p.vertices[0][i];
    for (const auto& v : p.vertices) mn = std::min(mn, v[i]);
    shift[i] = mn;
  }
  for (const auto& v : p.vertices) moved.push_back(qsub(v, shift));
  return convex_hull(p.ambient, moved);
}

// Codimension-one skeleton of the inner normal fan with edge lattice lengths
// as weights, built through the library's own complete-intersection path.
WeightedFan hypersurface_fan(const std::vector<IVec>& support, int dim) {
  PolynomialSystem sys;
  for (int i = 0; i < dim; ++i) sys.variables.push_back("x" + std::to_string(i));
  sys.supports.push_back(support);
  std::sort(sys.supports[0].begin(), sys.supports[0].end());
  return tropical_complete_intersection(sys).fan;
}

}  // namespace

TEST_CASE("univariate segment from a weighted origin fan") {
  WeightedFan f = make_fan(1, 0, {{}}, {3});
  CHECK(vertex_oracle(f, qv({1})) == iv({0}));
  CHECK(vertex_oracle(f, qv({-1})) == iv({3}));
  Polytope seg = reconstruct_polytope(f);
  CHECK(vertex_set(seg) == std::set<IVec>({iv({0}), iv({3})}));
}

TEST_CASE("unit square oracle values") {
  WeightedFan f = make_fan(2, 1,
                           {{iv({1, 0})}, {iv({0, 1})}, {iv({-1, 0})}, {iv({0, -1})}},
                           {1, 1, 1, 1});
  CHECK(vertex_oracle(f, qv({1, 1})) == iv({0, 0}));
  CHECK(vertex_oracle(f, qv({-1, -1})) == iv({1, 1}));
  Polytope square = reconstruct_polytope(f);
  CHECK(vertex_set(square) ==
        std::set<IVec>({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}));
}

TEST_CASE("oracle rejects non-generic directions") {
  WeightedFan f = make_fan(2, 1,
                           {{iv({1, 0})}, {iv({0, 1})}, {iv({-1, 0})}, {iv({0, -1})}},
                           {1, 1, 1, 1});
  CHECK_THROWS_AS(vertex_oracle(f, qv({1, 0})), non_generic_direction);
  CHECK_THROWS_AS(vertex_oracle(f, qv({0, -1})), non_generic_direction);
}

TEST_CASE("asymmetric triangle reconstructs with its edge lengths") {
  WeightedFan f =
      make_fan(2, 1, {{iv({0, 1})}, {iv({1, 0})}, {iv({-1, -2})}}, {2, 1, 1});
  CHECK(check_balancing(f).balanced);
  Polytope tri = reconstruct_polytope(f);
  CHECK(vertex_set(tri) == std::set<IVec>({iv({0, 0}), iv({2, 0}), iv({0, 1})}));
}

TEST_CASE("octahedron round trip through its tropical surface") {
  std::vector<IVec> oct = {iv({2, 2, 0}), iv({0, 2, 2}), iv({0, 1, 0}),
                           iv({2, 0, 2}), iv({1, 0, 0}), iv({0, 0, 1})};
  WeightedFan f = hypersurface_fan(oct, 3);
  Polytope p = reconstruct_polytope(f);
  CHECK(vertex_set(p) == std::set<IVec>(oct.begin(), oct.end()));

  // Generic directions agree with direct minimization over the result.
  IVec probe = vertex_oracle(f, qv({1, 2, 3}));
  auto face = face_vertices_in_direction(p, qv({1, 2, 3}));
  REQUIRE(face.size() == 1);
  CHECK(to_qvec(probe) == p.vertices[face[0]]);
}

TEST_CASE("unbalanced fans are rejected up front") {
  WeightedFan f = make_fan(2, 1, {{iv({1, 0})}, {iv({-1, 0})}}, {1, 2});
  CHECK_THROWS_AS(reconstruct_polytope(f), computation_error);
}

TEST_CASE("random polytopes round trip through their dual fans") {
  tth::Rng rng(20240817);
  int done = 0;
  for (int trial = 0; trial < 40 && done < 24; ++trial) {
    int dim = static_cast<int>(rng.range(2, 3));
    auto pts = tth::random_points(rng, dim, dim + 4, 0, 4);
    Polytope p = convex_hull(dim, pts);
    if (p.dim != dim) continue;
    Polytope canon = canonical_translate(p);
    WeightedFan fan = hypersurface_fan(canon.integer_vertices(), dim);
    Polytope back = reconstruct_polytope(fan);
    CHECK(vertex_set(back) == vertex_set(canon));
    ++done;
  }
  CHECK(done == 24);
}

TEST_CASE("lower-dimensional duals reconstruct too") {
  // The tropical fan of a segment in the plane: one line's worth of rays,
  // weight one; its polytope is the segment itself.
  WeightedFan f = make_fan(2, 1, {{iv({0, 1})}, {iv({0, -1})}}, {1, 1});
  Polytope seg = reconstruct_polytope(f);
  CHECK(vertex_set(seg) == std::set<IVec>({iv({0, 0}), iv({1, 0})}));
}
