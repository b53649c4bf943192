#include "tropimp/dd.hpp"

#include <algorithm>
#include <map>

#include "tropimp/lattice.hpp"

namespace tropimp {

namespace {

// p and q lie on opposite sides of the current constraint. They combine into
// a new extreme ray only if the minimal face containing both has the right
// rank; combinatorially: no third ray is tight on every constraint both are
// tight on.
bool adjacent(const std::vector<DDRay>& rays, std::size_t pi, std::size_t qi,
              const Bitset& common) {
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (k == pi || k == qi) continue;
    if (common.is_subset_of(rays[k].tight)) return false;
  }
  return true;
}

}  // namespace

GeneratorDescription dual_description(int dim, const std::vector<IVec>& rows) {
  std::vector<IVec> lineality;
  lineality.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    IVec e(dim, Int(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DDRay> rays;
  const std::size_t n = rows.size();

  auto evaluate_tight = [&](const IVec& v, std::size_t upto) {
    Bitset t(n);
    for (std::size_t k = 0; k < upto; ++k)
      if (dot(rows[k], v) == 0) t.set(k);
    return t;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const IVec& a = rows[k];

    // Reduce the lineality space first if it sticks out of the halfspace.
    std::size_t pivot = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (dot(a, lineality[i]) != 0) { pivot = i; break; }
    }
    if (pivot != lineality.size()) {
      IVec l0 = lineality[pivot];
      Int s0 = dot(a, l0);
      if (s0 < 0) { l0 = negate(l0); s0 = -s0; }
      std::vector<IVec> new_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pivot) continue;
        Int si = dot(a, lineality[i]);
        IVec l(dim);
        for (int c = 0; c < dim; ++c)
          l[c] = s0 * lineality[i][c] - si * l0[c];
        new_lin.push_back(primitive(l));
      }
      lineality = std::move(new_lin);
      for (auto& r : rays) {
        Int sr = dot(a, r.v);
        if (sr != 0) {
          IVec v(dim);
          for (int c = 0; c < dim; ++c) v[c] = s0 * r.v[c] - sr * l0[c];
          r.v = primitive(v);
        }
        r.tight = evaluate_tight(r.v, k + 1);
      }
      DDRay r0;
      r0.v = std::move(l0);
      r0.tight = evaluate_tight(r0.v, k + 1);
      rays.push_back(std::move(r0));
      continue;
    }

    // Lineality is inside the hyperplane; classic ray partition step.
    std::vector<std::size_t> pos, neg;
    std::vector<Int> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].tight.set(k);
      continue;
    }

    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] >= 0) {
        DDRay r = rays[i];
        if (value[i] == 0) r.tight.set(k);
        next.push_back(std::move(r));
      }
    }
    std::map<IVec, bool> seen;
    for (auto& r : next) seen[r.v] = true;
    for (std::size_t pi : pos) {
      for (std::size_t qi : neg) {
        Bitset common = rays[pi].tight & rays[qi].tight;
        if (!adjacent(rays, pi, qi, common)) continue;
        IVec v(dim);
        for (int c = 0; c < dim; ++c)
          v[c] = value[pi] * rays[qi].v[c] - value[qi] * rays[pi].v[c];
        v = primitive(v);
        if (seen.count(v)) continue;
        seen[v] = true;
        DDRay r;
        r.v = std::move(v);
        r.tight = evaluate_tight(r.v, k + 1);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  GeneratorDescription out;
  if (!lineality.empty()) {
    // Canonical saturated basis of the lineality space.
    out.lineality = saturated_span_lattice(lineality, dim);
  }
  out.rays = std::move(rays);
  std::sort(out.rays.begin(), out.rays.end(),
            [](const DDRay& x, const DDRay& y) { return x.v < y.v; });
  return out;
}

}  // namespace tropimp
