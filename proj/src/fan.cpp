#include "tropimp/fan.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"

namespace tropimp {

Cone WeightedFan::cone_at(int i) const {
  Cone c;
  c.ambient = ambient;
  for (int idx : cones[i]) c.rays.push_back(rays[idx]);
  return c;
}

WeightedFan make_fan(int ambient, int dim,
                     const std::vector<std::vector<IVec>>& cone_rays,
                     const std::vector<Int>& multiplicities) {
  if (cone_rays.size() != multiplicities.size())
    throw input_error("fan: cone and multiplicity counts differ");
  WeightedFan fan;
  fan.ambient = ambient;
  fan.dim = dim;

  std::map<IVec, int> ray_index;
  struct Entry {
    std::vector<int> cone;
    Int mult;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < cone_rays.size(); ++i) {
    if (multiplicities[i] < 1)
      throw input_error("fan: multiplicities must be positive");
    Entry e;
    e.mult = multiplicities[i];
    IMat prim;
    for (const auto& r : cone_rays[i]) {
      if (static_cast<int>(r.size()) != ambient)
        throw input_error("fan: ray dimension mismatch");
      prim.push_back(primitive(r));
    }
    std::sort(prim.begin(), prim.end());
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
    int cone_dim = prim.empty() ? 0 : rank(prim);
    if (cone_dim != dim)
      throw input_error("fan: not pure of the stated dimension");
    for (const auto& r : prim) {
      auto it = ray_index.find(r);
      if (it == ray_index.end())
        it = ray_index.emplace(r, static_cast<int>(ray_index.size())).first;
      e.cone.push_back(it->second);
    }
    entries.push_back(std::move(e));
  }

  // Rays in lex order, then cones re-indexed and sorted.
  std::vector<int> remap(ray_index.size());
  int pos = 0;
  for (auto& [ray, old_idx] : ray_index) {
    fan.rays.push_back(ray);
    remap[old_idx] = pos++;
  }
  for (auto& e : entries) {
    for (auto& idx : e.cone) idx = remap[idx];
    std::sort(e.cone.begin(), e.cone.end());
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.cone < b.cone; });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].cone == entries[i + 1].cone)
      throw input_error("fan: duplicate maximal cone");
  for (auto& e : entries) {
    fan.cones.push_back(std::move(e.cone));
    fan.multiplicities.push_back(std::move(e.mult));
  }
  return fan;
}

namespace {

struct ConeCache {
  Cone cone;
  ConeHRep hrep;
  IMat span_basis;   // saturated
  IMat ray_coords;   // rays in span_basis coordinates (integer)
};

ConeCache build_cache(const WeightedFan& fan, int i) {
  ConeCache cc;
  cc.cone = fan.cone_at(i);
  cc.hrep = cone_hrep(cc.cone);
  if (!cc.cone.rays.empty()) {
    cc.span_basis = saturated_span_lattice(cc.cone.rays, fan.ambient);
    RowBasisSolver solver(cc.span_basis);
    for (const auto& r : cc.cone.rays) {
      auto x = solver.solve(r);
      IVec xi(cc.span_basis.size());
      for (std::size_t k = 0; k < xi.size(); ++k) xi[k] = numerator((*x)[k]);
      cc.ray_coords.push_back(std::move(xi));
    }
  }
  return cc;
}

}  // namespace

BalanceReport check_balancing(const WeightedFan& fan) {
  BalanceReport report;
  const int d = fan.dim;
  if (d == 0 || fan.cones.empty()) return report;

  std::vector<ConeCache> cache;
  cache.reserve(fan.cones.size());
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    cache.push_back(build_cache(fan, i));

  // Ridge candidates: the (d-1)-faces of every maximal cone, plus pairwise
  // intersections of same-span candidates (partial overlaps of walls when
  // cone structures are not facet-to-facet).
  std::map<IMat, IMat> ridges;  // canonical rays -> span basis (empty for {0})
  auto add_ridge = [&](IMat rays) {
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (ridges.count(rays)) return;
    IMat span;
    if (!rays.empty()) span = saturated_span_lattice(rays, fan.ambient);
    if (!rays.empty() && static_cast<int>(span.size()) != d - 1) return;
    ridges.emplace(std::move(rays), std::move(span));
  };

  for (const auto& cc : cache) {
    for (const auto& u : cc.hrep.ineqs) {
      IMat face_rays;
      for (const auto& r : cc.cone.rays)
        if (dot(u, r) == 0) face_rays.push_back(r);
      if (face_rays.empty() && d != 1) continue;  // facet is the origin only for d == 1
      add_ridge(std::move(face_rays));
    }
  }
  if (d >= 2) {
    std::map<IMat, std::vector<const IMat*>> by_span;
    for (const auto& [rays, span] : ridges) by_span[span].push_back(&rays);
    std::vector<IMat> extra;
    for (const auto& [span, members] : by_span) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ConeData a = cone_from_generators(fan.ambient, *members[i]);
          ConeData b = cone_from_generators(fan.ambient, *members[j]);
          Cone inter = cone_intersect(fan.ambient, a.hrep, b.hrep);
          if (!inter.lineality.empty()) continue;
          if (inter.rays.empty()) continue;
          if (rank(inter.rays) != d - 1) continue;
          extra.push_back(inter.rays);
        }
      }
    }
    for (auto& rays : extra) add_ridge(std::move(rays));
  }

  for (const auto& [ridge_rays, ridge_span] : ridges) {
    IVec total(fan.ambient, Int(0));
    for (std::size_t ci = 0; ci < fan.cones.size(); ++ci) {
      const ConeCache& cc = cache[ci];
      bool contained = true;
      for (const auto& r : ridge_rays)
        if (!cone_contains(cc.hrep, r)) { contained = false; break; }
      if (!contained) continue;
      // Minimal face of the cone containing the ridge: if no facet functional
      // is tight on the whole ridge, the ridge meets the relative interior
      // and the cone's two local halves cancel.
      bool has_tight = false;
      for (const auto& u : cc.hrep.ineqs) {
        bool tight = true;
        for (const auto& r : ridge_rays)
          if (dot(u, r) != 0) { tight = false; break; }
        if (tight) { has_tight = true; break; }
      }
      if (!has_tight) continue;

      // Quotient direction: primitive generator of (span cone)/(span ridge),
      // pointing into the cone.
      const int sdim = static_cast<int>(cc.span_basis.size());
      IMat coords;  // ridge span basis in cone span coordinates
      if (!ridge_span.empty()) {
        RowBasisSolver solver(cc.span_basis);
        for (const auto& t : ridge_span) {
          auto x = solver.solve(t);
          IVec xi(sdim);
          for (int k = 0; k < sdim; ++k) xi[k] = numerator((*x)[k]);
          coords.push_back(std::move(xi));
        }
      }
      IMat kernel = integer_kernel(coords, sdim);
      // coords has rank d-1 inside Z^d, so the kernel is one primitive row.
      IVec phi = kernel.at(0);
      Int side = 0;
      for (const auto& rc : cc.ray_coords) side += dot(phi, rc);
      if (side < 0) phi = negate(phi);
      IVec y = solve_unit(phi);
      IVec u(fan.ambient, Int(0));
      for (int k = 0; k < sdim; ++k)
        for (int c = 0; c < fan.ambient; ++c)
          u[c] += y[k] * cc.span_basis[k][c];
      for (int c = 0; c < fan.ambient; ++c)
        total[c] += fan.multiplicities[ci] * u[c];
    }
    bool ok;
    if (ridge_span.empty()) {
      ok = is_zero(total);
    } else {
      IMat check = ridge_span;
      check.push_back(total);
      ok = rank(check) == static_cast<int>(ridge_span.size());
    }
    if (!ok) {
      report.balanced = false;
      report.ridge_rays = ridge_rays;
      std::ostringstream msg;
      msg << "balancing fails at ridge {";
      for (std::size_t i = 0; i < ridge_rays.size(); ++i) {
        if (i) msg << "; ";
        msg << to_string(ridge_rays[i]);
      }
      msg << "}: weighted normal sum " << to_string(total)
          << " is outside the ridge span";
      report.message = msg.str();
      return report;
    }
  }
  return report;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

Int parse_int_token(const std::string& tok, const std::string& where) {
  try {
    return Int(tok);
  } catch (const std::exception&) {
    throw input_error("fan file: bad integer '" + tok + "' in " + where);
  }
}

}  // namespace

WeightedFan read_fan(std::istream& in) {
  static const std::vector<std::string> kSections = {
      "AMBIENT_DIM", "DIM", "RAYS", "MAXIMAL_CONES", "MULTIPLICITIES"};
  std::map<std::string, std::vector<std::string>> sections;
  std::string current;
  std::string line;
  while (std::getline(in, line)) {
    // Trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string t = line.substr(b, e - b + 1);
    if (std::find(kSections.begin(), kSections.end(), t) != kSections.end()) {
      current = t;
      sections[current];
      continue;
    }
    if (current.empty())
      throw input_error("fan file: content before any section header: '" + t + "'");
    sections[current].push_back(t);
  }

  if (!sections.count("DIM") || sections["DIM"].empty())
    throw input_error("fan file: missing DIM");
  auto dim_toks = split_ws(sections["DIM"][0]);
  int dim = static_cast<int>(parse_int_token(dim_toks.at(0), "DIM"));

  std::vector<IVec> rays;
  for (const auto& row : sections["RAYS"]) {
    auto toks = split_ws(row);
    IVec r;
    for (const auto& t : toks) r.push_back(parse_int_token(t, "RAYS"));
    rays.push_back(std::move(r));
  }
  int ambient = -1;
  if (sections.count("AMBIENT_DIM") && !sections["AMBIENT_DIM"].empty()) {
    ambient = static_cast<int>(
        parse_int_token(split_ws(sections["AMBIENT_DIM"][0]).at(0), "AMBIENT_DIM"));
  } else if (!rays.empty()) {
    ambient = static_cast<int>(rays[0].size());
  } else {
    throw input_error("fan file: AMBIENT_DIM required when there are no rays");
  }
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != ambient)
      throw input_error("fan file: ray length differs from ambient dimension");

  std::vector<std::vector<IVec>> cone_rays;
  for (const auto& row : sections["MAXIMAL_CONES"]) {
    std::vector<IVec> cr;
    for (const auto& t : split_ws(row)) {
      long long idx = std::stoll(t);
      if (idx < 0 || idx >= static_cast<long long>(rays.size()))
        throw input_error("fan file: ray index " + t + " out of range");
      cr.push_back(rays[idx]);
    }
    cone_rays.push_back(std::move(cr));
  }
  std::vector<Int> mults;
  for (const auto& row : sections["MULTIPLICITIES"])
    for (const auto& t : split_ws(row))
      mults.push_back(parse_int_token(t, "MULTIPLICITIES"));
  if (mults.size() != cone_rays.size())
    throw input_error("fan file: multiplicity count differs from cone count");
  return make_fan(ambient, dim, cone_rays, mults);
}

void write_fan(std::ostream& out, const WeightedFan& fan) {
  for (const auto& c : fan.cones)
    if (c.empty())
      throw input_error("fan file: zero-dimensional cones are not representable");
  out << "AMBIENT_DIM\n" << fan.ambient << "\n\n";
  out << "DIM\n" << fan.dim << "\n\n";
  out << "RAYS\n";
  for (const auto& r : fan.rays) out << to_string(r) << "\n";
  out << "\nMAXIMAL_CONES\n";
  for (const auto& c : fan.cones) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << "\n";
  }
  out << "\nMULTIPLICITIES\n";
  for (const auto& m : fan.multiplicities) out << m << "\n";
}

std::string fan_to_string(const WeightedFan& fan) {
  std::ostringstream os;
  write_fan(os, fan);
  return os.str();
}

WeightedFan fan_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_fan(is);
}

}  // namespace tropimp
