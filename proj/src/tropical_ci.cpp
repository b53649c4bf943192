#include "tropimp/tropical_ci.hpp"

#include <algorithm>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"
#include "tropimp/parallel.hpp"

namespace tropimp {

TropicalResult tropical_complete_intersection(const PolynomialSystem& system,
                                              int threads) {
  const int p = system.num_variables();
  const int c = system.num_polynomials();
  if (c == 0) throw input_error("tropical intersection: no polynomials");
  if (c > p)
    throw input_error(
        "tropical intersection: more polynomials than variables (need c <= p)");

  std::vector<Polytope> newton;
  newton.reserve(c);
  for (const auto& support : system.supports)
    newton.push_back(convex_hull(p, support));

  TropicalResult result;
  if (c == p) {
    result.is_mixed_volume = true;
    result.mixed_volume_value = mixed_volume(newton);
    return result;
  }

  // Minkowski sum of all Newton polytopes, assembled from vertex sums.
  std::vector<QVec> sums = {QVec(p, Rat(0))};
  for (const auto& poly : newton) {
    std::vector<QVec> next;
    next.reserve(sums.size() * poly.vertices.size());
    for (const auto& s : sums)
      for (const auto& v : poly.vertices) next.push_back(qadd(s, v));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  Polytope msum = convex_hull(p, sums);
  if (msum.dim < p)
    throw input_error(
        "tropical intersection: the Minkowski sum of the Newton polytopes is "
        "not full-dimensional; restrict the system to the saturated span "
        "sublattice of the supports first");

  const int d = p - c;
  std::vector<SkeletonCone> skeleton = normal_fan_skeleton(msum, d);

  // Mixed volume of the face tuple at the representative of each cone,
  // computed in the saturated lattice parallel to the sum of the faces.
  std::vector<Int> weight(skeleton.size(), Int(0));
  parallel_for(static_cast<int>(skeleton.size()), threads, [&](int idx) {
    const QVec w = to_qvec(skeleton[idx].rep);
    std::vector<std::vector<QVec>> face_points(c);
    IMat directions;
    for (int i = 0; i < c; ++i) {
      for (int vi : face_vertices_in_direction(newton[i], w))
        face_points[i].push_back(newton[i].vertices[vi]);
      for (std::size_t k = 1; k < face_points[i].size(); ++k) {
        directions.push_back(
            clear_denominators(qsub(face_points[i][k], face_points[i][0])));
      }
    }
    bool trivial = true;
    for (const auto& dir : directions)
      if (!is_zero(dir)) { trivial = false; break; }
    if (trivial || directions.empty()) return;  // sum of faces is a point
    IMat lattice = saturated_span_lattice(directions, p);
    if (static_cast<int>(lattice.size()) != c) return;  // degenerate tuple

    RowBasisSolver solver(lattice);
    std::vector<Polytope> coord_faces;
    coord_faces.reserve(c);
    for (int i = 0; i < c; ++i) {
      std::vector<QVec> coords;
      coords.reserve(face_points[i].size());
      for (const auto& pt : face_points[i]) {
        auto x = solver.solve(qsub(pt, face_points[i][0]));
        coords.push_back(std::move(*x));
      }
      coord_faces.push_back(convex_hull(c, coords));
    }
    weight[idx] = mixed_volume(coord_faces);
  });

  std::vector<std::vector<IVec>> cone_rays;
  std::vector<Int> mults;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    if (weight[i] <= 0) continue;
    cone_rays.push_back(skeleton[i].cone.rays);
    mults.push_back(weight[i]);
  }
  result.fan = make_fan(p, d, cone_rays, mults);
  return result;
}

}  // namespace tropimp
