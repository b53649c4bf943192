#include "tropimp/implicitize.hpp"

#include <algorithm>

#include "tropimp/pushforward.hpp"
#include "tropimp/reconstruct.hpp"
#include "tropimp/tropical_ci.hpp"

namespace tropimp {

GraphSystem build_graph_system(const PolynomialSystem& g) {
  const int n = g.num_polynomials();
  const int t = g.num_variables();
  if (n < 2)
    throw input_error("implicitization needs at least two polynomials");
  if (t != n - 1)
    throw input_error("implicitization expects n polynomials in n-1 variables (got " +
                      std::to_string(n) + " in " + std::to_string(t) + ")");
  const int p = 2 * n - 1;

  GraphSystem out;
  out.system.variables = g.variables;
  for (int i = 1; i <= n; ++i) {
    std::string name = "y" + std::to_string(i);
    while (std::find(out.system.variables.begin(), out.system.variables.end(),
                     name) != out.system.variables.end())
      name += "_";
    out.system.variables.push_back(name);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<IVec> support;
    for (const auto& a : g.supports[i]) {
      IVec e(p, Int(0));
      for (int j = 0; j < t; ++j) e[j] = a[j];
      support.push_back(std::move(e));
    }
    IVec unit(p, Int(0));
    unit[t + i] = 1;
    support.push_back(std::move(unit));
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    out.system.supports.push_back(std::move(support));
  }
  out.map.matrix.assign(n, IVec(p, Int(0)));
  for (int i = 0; i < n; ++i) out.map.matrix[i][t + i] = 1;
  return out;
}

Int newton_degree(const Polytope& p) {
  Rat best = 0;
  for (const auto& v : p.vertices) {
    Rat s = 0;
    for (const auto& x : v) s += x;
    best = std::max(best, s);
  }
  if (denominator(best) != 1)
    throw computation_error("newton_degree: non-integral vertex sums");
  return numerator(best);
}

ImplicitizationResult implicitize(const PolynomialSystem& g, const Int& delta,
                                  int threads) {
  GraphSystem graph = build_graph_system(g);
  TropicalResult trop = tropical_complete_intersection(graph.system, threads);
  WeightedFan pushed = push_forward(trop.fan, graph.map, delta, threads);
  if (pushed.dim != graph.map.rows() - 1)
    throw computation_error("implicitization: the image is not a hypersurface");
  ImplicitizationResult res;
  res.newton = reconstruct_polytope(pushed, threads);
  res.lattice_point_count = count_lattice_points(res.newton);
  res.degree = newton_degree(res.newton);
  return res;
}

}  // namespace tropimp
