#include <doctest.h>

#include <set>

#include "test_helpers.hpp"
#include "tropimp/commands.hpp"
#include "tropimp/implicitize.hpp"

using namespace tropimp;
using tth::im;
using tth::iv;

TEST_CASE("graph system of the surface example") {
  PolynomialSystem g = parse_system(
      "[x,y]\n[x^(-2)*y^(-2) + x + x*y, x^2 + y + x^(-1), y^2 + x^(-1)*y^(-1) + y^(-1)]");
  GraphSystem graph = build_graph_system(g);
  CHECK(graph.system.num_variables() == 5);
  CHECK(graph.system.num_polynomials() == 3);
  // Each support is the original one padded with zeros plus one unit vector.
  for (int i = 0; i < 3; ++i) {
    const auto& support = graph.system.supports[i];
    CHECK(support.size() == g.supports[i].size() + 1);
    IVec unit(5, Int(0));
    unit[2 + i] = 1;
    CHECK(std::find(support.begin(), support.end(), unit) != support.end());
  }
  CHECK(graph.map.matrix ==
        im({{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
}

TEST_CASE("graph construction rejects bad shapes") {
  PolynomialSystem lone;
  lone.supports.push_back({IVec{}});
  CHECK_THROWS_AS(build_graph_system(lone), input_error);
  PolynomialSystem wrong = parse_system("[x,y][x + y, x*y + 1]");
  CHECK_THROWS_AS(build_graph_system(wrong), input_error);
}

TEST_CASE("implicitization of a parabola-like parametrization") {
  // x = a*t, y = b*t^2 + c*t + d eliminates to a*a*y - b*x^2 - ..., whose
  // polygon is conv{(0,0),(2,0),(0,1)} with four lattice points.
  PolynomialSystem g = parse_system("[t][t, t^2 + t + 1]");
  ImplicitizationResult res = implicitize(g);
  std::set<IVec> expect = {iv({0, 0}), iv({2, 0}), iv({0, 1})};
  std::set<IVec> got;
  for (const auto& v : res.newton.integer_vertices()) got.insert(v);
  CHECK(got == expect);
  CHECK(res.lattice_point_count == 4);
  CHECK(res.degree == 2);
}

TEST_CASE("implicitization of a monomial curve in space") {
  // (t, t^2, t^3) has no hypersurface image in C^3: three polynomials in one
  // variable is not a parametrization shape this pipeline accepts.
  PolynomialSystem g = parse_system("[t][t, t^2, t^3]");
  CHECK_THROWS_AS(implicitize(g), input_error);
}

TEST_CASE("run_trim on a graph-form input eliminates the leading variable") {
  // The pentagon from the rational parametrization with cleared denominators.
  std::string out = run_trim(
      "[ t, x, y ]\n[ t^3 + t + 1   +  x*t^2 + x ,\n"
      "  t^4 + t^3 + 1  +  y*t^2 + y ]\n");
  CHECK(out.find("VERTICES\n") == 0);
  std::set<std::string> rows;
  std::istringstream is(out.substr(9));
  std::string line;
  while (std::getline(is, line) && !line.empty()) rows.insert(line);
  std::set<std::string> expect = {"1 4 2", "1 0 3", "1 2 3", "1 0 0", "1 4 0"};
  CHECK(rows == expect);
}

TEST_CASE("run_trci prints the mixed volume for square systems") {
  std::string out = run_trci("[x,y,z][x*y + z + 1, x*z + y + 1, y*z + x + 1]");
  CHECK(out == "MIXED_VOLUME\n5\n");
}

TEST_CASE("run_trim rejects impossible shapes") {
  CHECK_THROWS_AS(run_trim("[x,y][x + y, x*y + 1]"), input_error);
}
