#include <doctest.h>

#include <algorithm>

#include "test_helpers.hpp"
#include "tropimp/poly_io.hpp"

using namespace tropimp;
using tth::im;
using tth::iv;

TEST_CASE("parse the surface input") {
  PolynomialSystem sys = parse_system("[x,y]\n[x^(-2)*y^(-2) + x + x*y]");
  REQUIRE(sys.variables == std::vector<std::string>({"x", "y"}));
  REQUIRE(sys.supports.size() == 1);
  std::vector<IVec> expect = {iv({-2, -2}), iv({1, 0}), iv({1, 1})};
  std::sort(expect.begin(), expect.end());
  CHECK(sys.supports[0] == expect);
}

TEST_CASE("single monomial and bare constants") {
  PolynomialSystem sys = parse_system("[x][x]");
  CHECK(sys.supports[0] == std::vector<IVec>({iv({1})}));

  PolynomialSystem graph = parse_system("[t,x,y][t^3 + t + 1 + x*t^2 + x]");
  std::vector<IVec> expect = {iv({3, 0, 0}), iv({1, 0, 0}), iv({0, 0, 0}),
                              iv({2, 1, 0}), iv({0, 1, 0})};
  std::sort(expect.begin(), expect.end());
  CHECK(graph.supports[0] == expect);
}

TEST_CASE("coefficients are parsed and dropped") {
  PolynomialSystem a = parse_system("[x,y][2*x + y]");
  PolynomialSystem b = parse_system("[x,y][x + y]");
  CHECK(a.supports == b.supports);
  // Duplicate monomials collapse into a set.
  PolynomialSystem c = parse_system("[x,y][x + x + 1*x]");
  CHECK(c.supports[0] == std::vector<IVec>({iv({1, 0})}));
}

TEST_CASE("minus separates terms like plus") {
  PolynomialSystem a = parse_system("[x,y][x - y + 3]");
  PolynomialSystem b = parse_system("[x,y][x + y + 3]");
  CHECK(a.supports == b.supports);
}

TEST_CASE("parser failure modes") {
  CHECK_THROWS_AS(parse_system("[x,y][x + z]"), parse_error);   // unknown variable
  CHECK_THROWS_AS(parse_system("[x,y][]"), parse_error);        // empty list
  CHECK_THROWS_AS(parse_system("[][1]"), parse_error);          // no variables
  CHECK_THROWS_AS(parse_system("[x,y][x +]"), parse_error);     // dangling operator
  CHECK_THROWS_AS(parse_system("[x,y][x*]"), parse_error);      // dangling star
  CHECK_THROWS_AS(parse_system("[x,y] oops [x]"), parse_error); // junk between blocks
  try {
    parse_system("[x,y]\n[x + q]");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialize then parse is stable") {
  const std::string text =
      "[x,y,z]\n[x*y + z + 1, x*z + y + 1, y*z + x + 1, x^3 + y^5 + z^7]";
  PolynomialSystem sys = parse_system(text);
  PolynomialSystem again = parse_system(serialize_system(sys));
  CHECK(sys.variables == again.variables);
  CHECK(sys.supports == again.supports);
}

TEST_CASE("monomial order in the input is irrelevant") {
  PolynomialSystem a = parse_system("[x,y][x + x*y + y^2]");
  PolynomialSystem b = parse_system("[x,y][y^2 + x*y + x]");
  CHECK(a.supports == b.supports);
}

TEST_CASE("negative exponents with and without parentheses") {
  PolynomialSystem a = parse_system("[x][x^(-2) + x^3]");
  PolynomialSystem b = parse_system("[x][x^-2 + x^3]");
  CHECK(a.supports == b.supports);
}

TEST_CASE("parse linear maps") {
  MonomialMap m = parse_linear_map("LINEAR_MAP\n1 1 1\n0 1 2\n");
  CHECK(m.matrix == im({{1, 1, 1}, {0, 1, 2}}));
  MonomialMap id = parse_linear_map("LINEAR_MAP\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(id.rows() == 3);
  CHECK(id.cols() == 3);
}

TEST_CASE("linear map failure modes") {
  CHECK_THROWS_WITH_AS(parse_linear_map("LINEAR_MAP\n1 1\n2 2\n"),
                       "linear map: row 2 is a rational combination of rows 1..1",
                       input_error);
  CHECK_THROWS_AS(parse_linear_map("LINEAR_MAP\n1 1\n2\n"), input_error);
  CHECK_THROWS_AS(parse_linear_map("1 1\n2 2\n"), input_error);
  CHECK_THROWS_AS(parse_linear_map("LINEAR_MAP\n"), input_error);
}

TEST_CASE("linear map round trip") {
  MonomialMap m = parse_linear_map("LINEAR_MAP\n3 -3 1 0 0\n8 -6 0 1 0\n15 -10 0 0 1\n");
  MonomialMap again = parse_linear_map(serialize_linear_map(m));
  CHECK(m.matrix == again.matrix);
}

TEST_CASE("polytope writer emits homogenized vertices and primitive facets") {
  Polytope tri =
      convex_hull(2, std::vector<IVec>{iv({0, 0}), iv({2, 0}), iv({0, 2})});
  PolytopeWriteOptions opts;
  opts.with_degree = true;
  std::string text = write_polytope(tri, opts);
  CHECK(text.find("VERTICES\n1 0 0\n1 0 2\n1 2 0\n") != std::string::npos);
  CHECK(text.find("N_LATTICE_POINTS\n6\n") != std::string::npos);
  CHECK(text.find("DEGREE\n2\n") != std::string::npos);
  CHECK(text.find("FACETS\n") != std::string::npos);
}
