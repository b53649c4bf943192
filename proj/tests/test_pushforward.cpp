#include <doctest.h>

#include <map>
#include <set>

#include "test_helpers.hpp"
#include "tropimp/pushforward.hpp"
#include "tropimp/reconstruct.hpp"
#include "tropimp/tropical_ci.hpp"

using namespace tropimp;
using tth::im;
using tth::iv;

namespace {

MonomialMap map_of(const IMat& rows) {
  MonomialMap m;
  m.matrix = rows;
  return m;
}

std::map<IVec, Int> ray_mults(const WeightedFan& fan) {
  std::map<IVec, Int> out;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    REQUIRE(fan.cones[i].size() == 1);
    out[fan.rays[fan.cones[i][0]]] = fan.multiplicities[i];
  }
  return out;
}

WeightedFan octahedron_fan() {
  PolynomialSystem sys =
      parse_system("[x,y,z][x + y + z + x^2*y^2 + x^2*z^2 + y^2*z^2]");
  return tropical_complete_intersection(sys).fan;
}

}  // namespace

TEST_CASE("projection of a balanced line fan onto an axis") {
  WeightedFan f = make_fan(2, 1, {{iv({1, 2})}, {iv({-1, -2})}}, {1, 1});
  WeightedFan g = push_forward(f, map_of(im({{1, 0}})));
  CHECK(g.ambient == 1);
  std::map<IVec, Int> expect = {{iv({1}), 1}, {iv({-1}), 1}};
  CHECK(ray_mults(g) == expect);

  // Projecting onto the second coordinate stretches the lattice by two.
  WeightedFan h = push_forward(f, map_of(im({{0, 1}})));
  std::map<IVec, Int> expect2 = {{iv({1}), 2}, {iv({-1}), 2}};
  CHECK(ray_mults(h) == expect2);
}

TEST_CASE("identity push-forward preserves support and multiplicities") {
  WeightedFan f = octahedron_fan();
  WeightedFan g = push_forward(f, map_of(im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(g.ambient == f.ambient);
  CHECK(g.dim == f.dim);
  // Same support with the same weight at every generic point: every output
  // cone lies in an input cone of equal multiplicity and vice versa.
  std::vector<std::pair<ConeHRep, Int>> in_cones, out_cones;
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    in_cones.emplace_back(cone_hrep(f.cone_at(i)), f.multiplicities[i]);
  for (std::size_t i = 0; i < g.cones.size(); ++i)
    out_cones.emplace_back(cone_hrep(g.cone_at(i)), g.multiplicities[i]);
  for (std::size_t i = 0; i < g.cones.size(); ++i) {
    IVec rep = cone_interior_point(g.cone_at(i));
    bool matched = false;
    for (const auto& [h, m] : in_cones) {
      if (cone_contains(h, rep)) {
        CHECK(m == g.multiplicities[i]);
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    IVec rep = cone_interior_point(f.cone_at(i));
    bool matched = false;
    for (const auto& [h, m] : out_cones) {
      if (cone_contains(h, rep)) {
        CHECK(m == f.multiplicities[i]);
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("push-forward keeps fans balanced") {
  PolynomialSystem sys =
      parse_system("[x1,x2,x3][x1^3 + x2^3 + x3^3 + 1, x1^(-2)+x2^(-2)+x3^(-2)+1]");
  WeightedFan f = tropical_complete_intersection(sys).fan;
  CHECK(check_balancing(f).balanced);
  WeightedFan g = push_forward(f, map_of(im({{1, 1, 1}, {0, 1, 2}})));
  CHECK(g.ambient == 2);
  CHECK(check_balancing(g).balanced);
}

TEST_CASE("space curve projects onto the mixed fiber hexagon") {
  PolynomialSystem sys =
      parse_system("[x1,x2,x3][x1^3 + x2^3 + x3^3 + 1, x1^(-2)+x2^(-2)+x3^(-2)+1]");
  WeightedFan f = tropical_complete_intersection(sys).fan;
  WeightedFan g = push_forward(f, map_of(im({{1, 1, 1}, {0, 1, 2}})));
  Polytope hexagon = reconstruct_polytope(g);
  std::set<QVec> expect = {to_qvec(iv({36, 0})),  to_qvec(iv({0, 36})),
                           to_qvec(iv({30, 12})), to_qvec(iv({18, 12})),
                           to_qvec(iv({6, 24})),  to_qvec(iv({18, 24}))};
  std::set<QVec> got(hexagon.vertices.begin(), hexagon.vertices.end());
  CHECK(got == expect);
}

TEST_CASE("multiplicity scaling is linear") {
  PolynomialSystem sys = parse_system("[x,y,z][x*y + z + 1, x*z + y + 1]");
  WeightedFan f = tropical_complete_intersection(sys).fan;
  WeightedFan f3 = make_fan(
      3, 1,
      [&] {
        std::vector<std::vector<IVec>> cones;
        for (std::size_t i = 0; i < f.cones.size(); ++i)
          cones.push_back(f.cone_at(i).rays);
        return cones;
      }(),
      [&] {
        std::vector<Int> m;
        for (const auto& x : f.multiplicities) m.push_back(3 * x);
        return m;
      }());
  MonomialMap a = map_of(im({{1, 1, 0}, {0, 1, 1}}));
  auto base = ray_mults(push_forward(f, a));
  auto scaled = ray_mults(push_forward(f3, a));
  REQUIRE(base.size() == scaled.size());
  for (const auto& [ray, m] : base) CHECK(scaled.at(ray) == 3 * m);
}

TEST_CASE("delta divides multiplicities or fails loudly") {
  WeightedFan f = make_fan(2, 1, {{iv({1, 0})}, {iv({-1, 0})}}, {4, 4});
  WeightedFan half = push_forward(f, map_of(im({{1, 0}, {0, 1}})), Int(2));
  std::map<IVec, Int> expect = {{iv({1, 0}), 2}, {iv({-1, 0}), 2}};
  CHECK(ray_mults(half) == expect);
  CHECK_THROWS_AS(push_forward(f, map_of(im({{1, 0}, {0, 1}})), Int(3)),
                  computation_error);
}

TEST_CASE("degenerate images are detected") {
  WeightedFan f = make_fan(2, 1, {{iv({1, 0})}, {iv({-1, 0})}}, {1, 1});
  // The map kills the whole fan support.
  CHECK_THROWS_AS(push_forward(f, map_of(im({{0, 1}}))), computation_error);
}

TEST_CASE("overlapping images stack their contributions") {
  // Two rays with the same image ray: their weights add. The ray (0,-1)
  // collapses to the origin and contributes nothing.
  WeightedFan f = make_fan(
      2, 1, {{iv({1, 0})}, {iv({1, 1})}, {iv({0, -1})}, {iv({-1, 0})}},
      {1, 1, 1, 2});
  CHECK(check_balancing(f).balanced);
  WeightedFan g = push_forward(f, map_of(im({{1, 0}})));
  std::map<IVec, Int> expect = {{iv({1}), 2}, {iv({-1}), 2}};
  CHECK(ray_mults(g) == expect);
}
