#include "tropimp/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"
#include "tropimp/parallel.hpp"

namespace tropimp {

namespace {

struct OracleCone {
  Cone cone;
  ConeHRep hrep;
  IVec normal;  // primitive normal of the cone's span hyperplane
  Int mult;
};

std::vector<OracleCone> prepare_cones(const WeightedFan& fan) {
  if (fan.dim != fan.ambient - 1)
    throw input_error("reconstruction needs a pure codimension-one fan");
  std::vector<OracleCone> cones;
  cones.reserve(fan.cones.size());
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    OracleCone oc;
    oc.cone = fan.cone_at(i);
    oc.hrep = cone_hrep(oc.cone);
    IMat kernel = integer_kernel(oc.cone.rays, fan.ambient);
    if (kernel.size() != 1)
      throw input_error("reconstruction: maximal cone has wrong dimension");
    oc.normal = primitive(kernel[0]);
    oc.mult = fan.multiplicities[i];
    cones.push_back(std::move(oc));
  }
  return cones;
}

IVec oracle_with_cones(const std::vector<OracleCone>& cones, int n, const QVec& w) {
  IVec vertex(n, Int(0));
  for (int i = 0; i < n; ++i) {
    for (const auto& oc : cones) {
      const Int& ni = oc.normal[i];
      Rat s = dot(oc.normal, w);
      if (ni == 0) {
        if (s != 0) continue;  // ray parallel to the span but off its plane
        // The ray runs inside the cone's span; any contact is non-generic.
        Rat t_lo = 0;
        bool lo_closed = false, bounded_above = false;
        Rat t_hi = 0;
        bool feasible = true;
        for (const auto& u : oc.hrep.ineqs) {
          Rat val = dot(u, w);
          const Int& coef = u[i];
          if (coef == 0) {
            if (val < 0) { feasible = false; break; }
          } else if (coef > 0) {
            Rat bound = -val / Rat(coef);
            if (bound > t_lo) { t_lo = bound; lo_closed = true; }
          } else {
            Rat bound = val / Rat(-coef);
            if (!bounded_above || bound < t_hi) { t_hi = bound; bounded_above = true; }
          }
        }
        if (feasible) {
          for (const auto& e : oc.hrep.eqs)
            if (e[i] == 0 && dot(e, w) != 0) { feasible = false; break; }
        }
        if (feasible) {
          bool touches;
          if (!bounded_above) {
            touches = true;  // some large t works
          } else if (t_hi > t_lo) {
            touches = true;
          } else {
            touches = (t_hi == t_lo) && lo_closed && t_lo > 0;
          }
          if (touches)
            throw non_generic_direction("ray w + t*e_" + std::to_string(i) +
                                        " meets a cone inside its span");
        }
        continue;
      }
      Rat t = -s / Rat(ni);
      if (t < 0) continue;
      if (t == 0) {
        if (cone_contains(oc.hrep, w))
          throw non_generic_direction("base point lies on the fan");
        continue;
      }
      QVec x = w;
      x[i] += t;
      if (cone_contains_in_relative_interior(oc.hrep, x)) {
        vertex[i] += oc.mult * abs(ni);
      } else if (cone_contains(oc.hrep, x)) {
        throw non_generic_direction("ray crosses the boundary of a maximal cone");
      }
    }
  }
  return vertex;
}

// Deterministic perturbation ladder: Vandermonde-style offsets with shrinking
// magnitude, so no fixed hyperplane family survives all attempts.
QVec perturbed(const QVec& w, int attempt, int n) {
  if (attempt == 0) return w;
  QVec out = w;
  Int base = 2 * attempt + 1;
  Rat eps(1, Int(1) << (6 * attempt));
  Rat scale = 1;
  for (int i = 0; i < n; ++i) {
    out[i] += eps * scale;
    scale *= Rat(base);
  }
  return out;
}

constexpr int kMaxAttempts = 44;

struct OracleBudget {
  long long calls = 0;
  long long cap = 0;
  void charge() {
    if (++calls > cap)
      throw computation_error("reconstruction exceeded its oracle budget (" +
                              std::to_string(cap) +
                              " calls); the fan is unlikely to be dual to a "
                              "polytope");
  }
};

// Tries perturbation levels starting at *attempt; on success *attempt holds
// the level that worked, so callers can escalate past it.
IVec robust_oracle(const std::vector<OracleCone>& cones, int n, const QVec& w,
                   int* attempt, OracleBudget& budget) {
  for (; *attempt < kMaxAttempts; ++*attempt) {
    budget.charge();
    try {
      return oracle_with_cones(cones, n, perturbed(w, *attempt, n));
    } catch (const non_generic_direction&) {
      continue;
    }
  }
  throw computation_error("reconstruction: no generic direction found near (" +
                          to_string(w) + ")");
}

}  // namespace

IVec vertex_oracle(const WeightedFan& fan, const QVec& w) {
  if (static_cast<int>(w.size()) != fan.ambient)
    throw input_error("vertex_oracle: direction dimension mismatch");
  return oracle_with_cones(prepare_cones(fan), fan.ambient, w);
}

Polytope reconstruct_polytope(const WeightedFan& fan, int threads) {
  const int n = fan.ambient;
  if (fan.cones.empty()) {
    // No tropical hypersurface: the dual polytope is a single point, placed
    // canonically at the origin.
    return convex_hull(n, std::vector<IVec>{IVec(n, Int(0))});
  }
  BalanceReport balance = check_balancing(fan);
  if (!balance.balanced)
    throw computation_error("reconstruction rejects an unbalanced fan: " +
                            balance.message);
  std::vector<OracleCone> cones = prepare_cones(fan);

  // Edge directions of the dual polytope are the span normals, so its
  // dimension is the rank of the normal collection.
  int expected_dim;
  {
    IMat normals;
    for (const auto& oc : cones) normals.push_back(oc.normal);
    expected_dim = rank(normals);
  }

  OracleBudget budget;
  budget.cap = 2000 + 200LL * static_cast<long long>(fan.cones.size() + 4 * n);

  std::set<IVec> known;
  std::vector<QVec> points;
  auto note = [&](const IVec& v) {
    if (known.insert(v).second) {
      points.push_back(to_qvec(v));
      return true;
    }
    return false;
  };

  // Seeds: +-e_i plus one mixed direction.
  std::vector<QVec> seeds;
  for (int i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    seeds.push_back(e);
    e[i] = -1;
    seeds.push_back(e);
  }
  {
    QVec mixed(n);
    Rat v(3, 2);
    for (int i = 0; i < n; ++i) {
      mixed[i] = v;
      v *= Rat(5, 3);
    }
    seeds.push_back(mixed);
  }
  for (const auto& s : seeds) {
    int attempt = 0;
    note(robust_oracle(cones, n, s, &attempt, budget));
  }

  std::map<std::pair<IVec, Int>, bool> confirmed;  // (a, a0) -> supporting
  while (true) {
    Polytope hull = convex_hull(n, points);

    if (hull.dim < expected_dim) {
      // Grow the affine hull: shoot along the missing directions with
      // escalating perturbations until a new vertex shows up.
      bool grew = false;
      for (const auto& eq : hull.equations) {
        for (int sign = 0; sign < 2 && !grew; ++sign) {
          QVec dir = to_qvec(sign == 0 ? eq.c : negate(eq.c));
          for (int attempt = 1; attempt < kMaxAttempts && !grew; ++attempt) {
            IVec v = robust_oracle(cones, n, dir, &attempt, budget);
            if (note(v)) grew = true;
          }
        }
        if (grew) break;
      }
      if (!grew)
        throw computation_error(
            "reconstruction: cannot recover the full-dimensional polytope the "
            "fan promises (normals span more than the hull reaches)");
      continue;
    }

    std::vector<int> pending;
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
      auto key = std::make_pair(hull.facets[f].a, hull.facets[f].a0);
      if (!confirmed.count(key)) pending.push_back(static_cast<int>(f));
    }
    if (pending.empty()) break;

    // Each tentative facet is probed in its inner-normal direction; the
    // queries are independent and may run in parallel.
    std::vector<IVec> answers(pending.size());
    std::vector<long long> spent(pending.size(), 0);
    const long long sub_cap = budget.cap;
    parallel_for(static_cast<int>(pending.size()), threads, [&](int k) {
      const Halfspace& facet = hull.facets[pending[k]];
      QVec dir = to_qvec(facet.a);
      OracleBudget local;
      local.cap = sub_cap;
      int attempt = 0;
      while (true) {
        IVec v = robust_oracle(cones, n, dir, &attempt, local);
        Rat val = Rat(facet.a0) + dot(facet.a, to_qvec(v));
        if (val <= 0) {
          answers[k] = std::move(v);
          break;
        }
        // Perturbation escaped this facet's normal cone; go finer.
        if (++attempt >= kMaxAttempts)
          throw computation_error(
              "reconstruction: oracle keeps overshooting a facet; the fan is "
              "not the tropicalization of a polytope");
      }
      spent[k] = local.calls;
    });

    for (std::size_t k = 0; k < pending.size(); ++k) {
      budget.calls += spent[k];
      if (budget.calls > budget.cap)
        throw computation_error(
            "reconstruction exceeded its oracle budget; the fan is unlikely "
            "to be dual to a polytope");
      const Halfspace& facet = hull.facets[pending[k]];
      const IVec& v = answers[k];
      for (const auto& entry : confirmed) {
        const auto& ckey = entry.first;
        if (Rat(ckey.second) + dot(ckey.first, to_qvec(v)) < 0)
          throw computation_error(
              "reconstruction: oracle vertex violates a confirmed facet; the "
              "fan is not the tropicalization of a polytope");
      }
      Rat val = Rat(facet.a0) + dot(facet.a, to_qvec(v));
      if (val == 0) confirmed[std::make_pair(facet.a, facet.a0)] = true;
      note(v);
    }
  }

  Polytope result = convex_hull(n, points);
  for (int i = 0; i < n; ++i) {
    Rat mn = result.vertices[0][i];
    for (const auto& v : result.vertices) mn = std::min(mn, v[i]);
    if (mn != 0)
      throw computation_error(
          "reconstruction: result misses the canonical placement; the fan "
          "multiplicities are inconsistent");
  }
  return result;
}

}  // namespace tropimp
