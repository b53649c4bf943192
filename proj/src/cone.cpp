#include "tropimp/cone.hpp"

#include <algorithm>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"

namespace tropimp {

namespace {

std::vector<IVec> with_equations(const IMat& ineqs, const IMat& eqs) {
  std::vector<IVec> rows = ineqs;
  for (const auto& e : eqs) {
    rows.push_back(e);
    rows.push_back(negate(e));
  }
  return rows;
}

}  // namespace

ConeData cone_from_generators(int ambient, const IMat& gens) {
  IMat nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(primitive(g));
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());

  ConeData out;
  out.cone.ambient = ambient;
  if (nonzero.empty()) {
    // The zero cone: every functional vanishes on it.
    for (int i = 0; i < ambient; ++i) {
      IVec e(ambient, Int(0));
      e[i] = 1;
      out.hrep.eqs.push_back(std::move(e));
    }
    out.dim = 0;
    return out;
  }

  GeneratorDescription dual = dual_description(ambient, nonzero);
  for (const auto& r : dual.rays) out.hrep.ineqs.push_back(r.v);
  out.hrep.eqs = dual.lineality;
  out.dim = ambient - static_cast<int>(out.hrep.eqs.size());

  GeneratorDescription prim =
      dual_description(ambient, with_equations(out.hrep.ineqs, out.hrep.eqs));
  out.cone.lineality = prim.lineality;
  for (const auto& r : prim.rays) out.cone.rays.push_back(r.v);
  std::sort(out.cone.rays.begin(), out.cone.rays.end());
  return out;
}

ConeHRep cone_hrep(const Cone& c) {
  IMat gens = c.rays;
  for (const auto& l : c.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  ConeHRep h;
  if (gens.empty()) {
    for (int i = 0; i < c.ambient; ++i) {
      IVec e(c.ambient, Int(0));
      e[i] = 1;
      h.eqs.push_back(std::move(e));
    }
    return h;
  }
  GeneratorDescription dual = dual_description(c.ambient, gens);
  for (const auto& r : dual.rays) h.ineqs.push_back(r.v);
  h.eqs = dual.lineality;
  return h;
}

int cone_dim(const Cone& c) {
  IMat all = c.rays;
  for (const auto& l : c.lineality) all.push_back(l);
  if (all.empty()) return 0;
  return rank(all);
}

bool cone_contains(const ConeHRep& h, const IVec& x) {
  for (const auto& e : h.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& u : h.ineqs)
    if (dot(u, x) < 0) return false;
  return true;
}

bool cone_contains(const ConeHRep& h, const QVec& x) {
  for (const auto& e : h.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& u : h.ineqs)
    if (dot(u, x) < 0) return false;
  return true;
}

bool cone_contains_in_relative_interior(const ConeHRep& h, const QVec& x) {
  for (const auto& e : h.eqs)
    if (dot(e, x) != 0) return false;
  for (const auto& u : h.ineqs)
    if (dot(u, x) <= 0) return false;
  return true;
}

Cone cone_intersect(int ambient, const ConeHRep& a, const ConeHRep& b) {
  std::vector<IVec> rows = with_equations(a.ineqs, a.eqs);
  auto more = with_equations(b.ineqs, b.eqs);
  rows.insert(rows.end(), more.begin(), more.end());
  GeneratorDescription gen = dual_description(ambient, rows);
  Cone c;
  c.ambient = ambient;
  for (const auto& r : gen.rays) c.rays.push_back(r.v);
  c.lineality = gen.lineality;
  return c;
}

IVec cone_interior_point(const Cone& c) {
  IVec w(c.ambient, Int(0));
  for (const auto& r : c.rays) w = add(w, r);
  return w;
}

}  // namespace tropimp
