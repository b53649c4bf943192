#include "tropimp/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"

namespace tropimp {

namespace {

Rat floor_rat(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return Rat(q);
}

Int floor_int(const Rat& x) { return numerator(floor_rat(x)); }

Int ceil_int(const Rat& x) { return -floor_int(-x); }

// Floor / ceil of a/b for integers, b != 0.
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

Rat det_rational(QMat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      Rat f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

// Placing triangulation of a point set of intrinsic dimension m; returns
// simplices as (m+1)-tuples of points.
void triangulate_points(int ambient, const std::vector<QVec>& points, int m,
                        std::vector<std::vector<QVec>>& out) {
  if (m == 0) {
    out.push_back({points[0]});
    return;
  }
  Polytope hull = convex_hull(ambient, points);
  const QVec& apex = hull.vertices[0];
  for (std::size_t f = 0; f < hull.facets.size(); ++f) {
    if (hull.facet_vertices[f][0]) continue;  // facet through the apex
    std::vector<QVec> facet_pts;
    for (std::size_t v = 0; v < hull.vertices.size(); ++v)
      if (hull.facet_vertices[f][v]) facet_pts.push_back(hull.vertices[v]);
    std::vector<std::vector<QVec>> sub;
    triangulate_points(ambient, facet_pts, m - 1, sub);
    for (auto& simplex : sub) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

bool Polytope::contains(const QVec& x) const {
  for (const auto& e : equations)
    if (Rat(e.c0) + dot(e.c, x) != 0) return false;
  for (const auto& f : facets)
    if (Rat(f.a0) + dot(f.a, x) < 0) return false;
  return true;
}

bool Polytope::is_lattice_polytope() const {
  for (const auto& v : vertices)
    for (const auto& x : v)
      if (denominator(x) != 1) return false;
  return true;
}

std::vector<IVec> Polytope::integer_vertices() const {
  std::vector<IVec> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) {
    IVec iv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (denominator(v[i]) != 1)
        throw computation_error("polytope vertex is not a lattice point");
      iv[i] = numerator(v[i]);
    }
    out.push_back(std::move(iv));
  }
  return out;
}

Polytope convex_hull(int ambient, const std::vector<QVec>& points) {
  if (points.empty()) throw input_error("convex_hull: empty point set");
  std::vector<QVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != ambient)
      throw input_error("convex_hull: point dimension mismatch");

  // Homogenize: facets of conv(pts) are the extreme rays of the cone dual to
  // cone{ (1, p) }, and affine-hull equations are its lineality space.
  std::vector<IVec> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    QVec h(ambient + 1);
    h[0] = 1;
    for (int i = 0; i < ambient; ++i) h[i + 1] = p[i];
    rows.push_back(clear_denominators(h));
  }
  GeneratorDescription dd = dual_description(ambient + 1, rows);

  Polytope poly;
  poly.ambient = ambient;
  for (const auto& l : dd.lineality) {
    AffineEquation eq;
    eq.c0 = l[0];
    eq.c.assign(l.begin() + 1, l.end());
    poly.equations.push_back(std::move(eq));
  }
  poly.dim = ambient - static_cast<int>(poly.equations.size());

  // Rays tight at no input point cut off the apex of the homogenization cone
  // only (arises when the polytope is a single point); they are not facets.
  std::vector<const DDRay*> facet_rays;
  for (const auto& r : dd.rays)
    if (r.tight.any()) facet_rays.push_back(&r);

  // A point is a vertex iff its tight facet normals together with the affine
  // hull equations have full rank.
  IMat eq_normals;
  for (const auto& e : poly.equations) eq_normals.push_back(e.c);
  std::vector<int> vertex_of_point(pts.size(), -1);
  std::vector<QVec> verts;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    IMat normals = eq_normals;
    for (const auto* r : facet_rays)
      if (r->tight[j]) normals.push_back(IVec(r->v.begin() + 1, r->v.end()));
    if (rank(normals) == ambient) {
      vertex_of_point[j] = static_cast<int>(verts.size());
      verts.push_back(pts[j]);
    }
  }

  // Canonical vertex order, then facet incidences over that order.
  std::vector<int> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return verts[x] < verts[y]; });
  std::vector<int> position(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<QVec> sorted_verts(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) sorted_verts[position[i]] = verts[i];
  poly.vertices = std::move(sorted_verts);

  struct FacetRow {
    Halfspace h;
    Bitset inc;
  };
  std::vector<FacetRow> frows;
  for (const auto* r : facet_rays) {
    FacetRow fr;
    fr.h.a0 = r->v[0];
    fr.h.a.assign(r->v.begin() + 1, r->v.end());
    fr.inc.resize(poly.vertices.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (r->tight[j] && vertex_of_point[j] >= 0)
        fr.inc.set(position[vertex_of_point[j]]);
    frows.push_back(std::move(fr));
  }
  std::sort(frows.begin(), frows.end(), [](const FacetRow& x, const FacetRow& y) {
    if (x.h.a != y.h.a) return x.h.a < y.h.a;
    return x.h.a0 < y.h.a0;
  });
  for (auto& fr : frows) {
    poly.facets.push_back(std::move(fr.h));
    poly.facet_vertices.push_back(std::move(fr.inc));
  }
  return poly;
}

Polytope convex_hull(int ambient, const std::vector<IVec>& points) {
  std::vector<QVec> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_qvec(p));
  return convex_hull(ambient, q);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient != q.ambient)
    throw input_error("minkowski_sum: ambient dimensions differ");
  std::vector<QVec> sums;
  sums.reserve(p.vertices.size() * q.vertices.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(qadd(a, b));
  return convex_hull(p.ambient, sums);
}

std::vector<int> face_vertices_in_direction(const Polytope& p, const QVec& w) {
  std::vector<int> arg;
  Rat best;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Rat val = dot(w, p.vertices[i]);
    if (arg.empty() || val < best) {
      best = val;
      arg.assign(1, static_cast<int>(i));
    } else if (val == best) {
      arg.push_back(static_cast<int>(i));
    }
  }
  return arg;
}

Polytope face_in_direction(const Polytope& p, const QVec& w) {
  if (static_cast<int>(w.size()) != p.ambient)
    throw input_error("face_in_direction: direction dimension mismatch");
  std::vector<QVec> pts;
  for (int i : face_vertices_in_direction(p, w)) pts.push_back(p.vertices[i]);
  return convex_hull(p.ambient, pts);
}

std::vector<FaceData> enumerate_faces(const Polytope& p, int min_dim) {
  const std::size_t nv = p.vertices.size();
  const std::size_t nf = p.facets.size();
  std::vector<Bitset> vertex_facets(nv, Bitset(nf));
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t v = 0; v < nv; ++v)
      if (p.facet_vertices[f][v]) vertex_facets[v].set(f);

  IMat eq_normals;
  for (const auto& e : p.equations) eq_normals.push_back(e.c);

  auto face_dim = [&](const Bitset& facets) {
    IMat normals = eq_normals;
    for (std::size_t f = 0; f < nf; ++f)
      if (facets[f]) normals.push_back(p.facets[f].a);
    return p.ambient - rank(normals);
  };

  std::map<std::vector<Bitset::block_type>, int> seen;  // verts -> dim
  auto key_of = [](const Bitset& b) {
    std::vector<Bitset::block_type> k(b.num_blocks());
    boost::to_block_range(b, k.begin());
    return k;
  };

  std::vector<FaceData> out;
  std::queue<FaceData> work;
  for (std::size_t f = 0; f < nf; ++f) {
    FaceData fd;
    fd.verts = p.facet_vertices[f];
    fd.facets.resize(nf);
    fd.facets.set(f);
    // Other facets with an identical vertex set cannot exist; the facet's
    // facet-set is itself.
    fd.dim = p.dim - 1;
    auto k = key_of(fd.verts);
    if (seen.emplace(k, fd.dim).second) {
      if (fd.dim >= min_dim) {
        out.push_back(fd);
        if (fd.dim > min_dim) work.push(fd);
      }
    }
  }

  while (!work.empty()) {
    FaceData cur = work.front();
    work.pop();
    for (std::size_t f = 0; f < nf; ++f) {
      if (cur.facets[f]) continue;
      Bitset s = cur.verts & p.facet_vertices[f];
      if (s.none()) continue;
      // Closure: intersect the facet sets of the members, then their verts.
      Bitset facets(nf);
      facets.set();
      for (std::size_t v = 0; v < nv; ++v)
        if (s[v]) facets &= vertex_facets[v];
      Bitset verts(nv);
      verts.set();
      for (std::size_t g = 0; g < nf; ++g)
        if (facets[g]) verts &= p.facet_vertices[g];
      auto k = key_of(verts);
      auto it = seen.find(k);
      if (it != seen.end()) continue;
      FaceData nd;
      nd.verts = std::move(verts);
      nd.facets = std::move(facets);
      nd.dim = face_dim(nd.facets);
      seen.emplace(k, nd.dim);
      if (nd.dim >= min_dim) {
        out.push_back(nd);
        if (nd.dim > min_dim) work.push(nd);
      }
    }
  }
  return out;
}

std::vector<long long> f_vector(const Polytope& p) {
  std::vector<long long> fv(std::max(p.dim, 0), 0);
  if (p.dim <= 0) return fv;
  for (const auto& face : enumerate_faces(p, 0)) {
    if (face.dim >= 0 && face.dim < p.dim) ++fv[face.dim];
  }
  return fv;
}

std::vector<SkeletonCone> normal_fan_skeleton(const Polytope& p, int d) {
  if (d < 0 || d > p.ambient)
    throw input_error("normal_fan_skeleton: dimension out of range");
  if (p.dim != p.ambient)
    throw input_error(
        "normal_fan_skeleton: polytope is not full-dimensional; restrict to "
        "its affine hull (pass the lineality explicitly)");
  std::vector<SkeletonCone> out;
  if (d == 0) {
    SkeletonCone sc;
    sc.cone.ambient = p.ambient;
    sc.rep.assign(p.ambient, Int(0));
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      sc.dual_face.push_back(static_cast<int>(v));
    out.push_back(std::move(sc));
    return out;
  }
  // d-cones of the inner normal fan are dual to (ambient-d)-faces, and their
  // extreme rays are the normals of the facets containing the face.
  for (const auto& face : enumerate_faces(p, p.ambient - d)) {
    if (face.dim != p.ambient - d) continue;
    SkeletonCone sc;
    sc.cone.ambient = p.ambient;
    for (std::size_t f = 0; f < p.facets.size(); ++f)
      if (face.facets[f]) sc.cone.rays.push_back(primitive(p.facets[f].a));
    std::sort(sc.cone.rays.begin(), sc.cone.rays.end());
    sc.rep = cone_interior_point(sc.cone);
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (face.verts[v]) sc.dual_face.push_back(static_cast<int>(v));
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const SkeletonCone& a, const SkeletonCone& b) {
    return a.cone.rays < b.cone.rays;
  });
  return out;
}

namespace {

// Shared scan for lattice point enumeration: fixes coordinates left to right
// over the bounding box and closes with an exact interval for the last one.
template <typename Visit>
void scan_lattice_points(const Polytope& p, Visit&& visit) {
  const int n = p.ambient;
  std::vector<Int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat mn = p.vertices[0][i], mx = p.vertices[0][i];
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_int(mn);
    hi[i] = floor_int(mx);
  }

  // All constraints as a0 + a . x >= 0 rows.
  std::vector<std::pair<Int, IVec>> cons;
  for (const auto& f : p.facets) cons.emplace_back(f.a0, f.a);
  for (const auto& e : p.equations) {
    cons.emplace_back(e.c0, e.c);
    cons.emplace_back(-e.c0, negate(e.c));
  }

  IVec x(n);
  auto rec = [&](auto&& self, int level) -> void {
    if (level == n - 1) {
      Int last_lo = lo[level], last_hi = hi[level];
      for (const auto& [a0, a] : cons) {
        Int val = a0;
        for (int i = 0; i < n - 1; ++i) val += a[i] * x[i];
        const Int& c = a[n - 1];
        if (c == 0) {
          if (val < 0) return;
        } else if (c > 0) {
          last_lo = std::max(last_lo, cdiv(-val, c));
        } else {
          last_hi = std::min(last_hi, fdiv(val, -c));
        }
        if (last_lo > last_hi) return;
      }
      for (Int t = last_lo; t <= last_hi; ++t) {
        x[n - 1] = t;
        visit(x);
      }
      return;
    }
    for (Int t = lo[level]; t <= hi[level]; ++t) {
      x[level] = t;
      self(self, level + 1);
    }
  };

  if (n == 0) return;
  rec(rec, 0);
}

}  // namespace

std::vector<IVec> lattice_points(const Polytope& p) {
  std::vector<IVec> pts;
  scan_lattice_points(p, [&](const IVec& x) { pts.push_back(x); });
  return pts;
}

long long count_lattice_points(const Polytope& p) {
  long long count = 0;
  scan_lattice_points(p, [&](const IVec&) { ++count; });
  return count;
}

Rat normalized_volume(const Polytope& p, const IMat& lattice_basis) {
  const int k = static_cast<int>(lattice_basis.size());
  if (p.dim > k)
    throw input_error("normalized_volume: polytope exceeds the lattice span");
  RowBasisSolver solver(lattice_basis);
  std::vector<QVec> coords;
  coords.reserve(p.vertices.size());
  const QVec& base = p.vertices[0];
  for (const auto& v : p.vertices) {
    auto c = solver.solve(qsub(v, base));
    if (!c)
      throw input_error(
          "normalized_volume: affine hull is not parallel to the lattice span");
    coords.push_back(std::move(*c));
  }
  if (p.dim < k) return Rat(0);
  if (k == 0) return Rat(1);

  std::vector<std::vector<QVec>> simplices;
  triangulate_points(k, coords, k, simplices);
  Rat total = 0;
  for (const auto& s : simplices) {
    QMat m(k, QVec(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) m[r][c] = s[r][c] - s[k][c];
    Rat d = det_rational(std::move(m));
    total += d < 0 ? -d : d;
  }
  return total;
}

Int mixed_volume(const std::vector<Polytope>& polytopes) {
  const int c = static_cast<int>(polytopes.size());
  if (c == 0) throw input_error("mixed_volume: no polytopes");
  for (const auto& p : polytopes)
    if (p.ambient != c)
      throw input_error(
          "mixed_volume: need exactly c polytopes in R^c (ambient mismatch)");
  IMat unit(c, IVec(c, Int(0)));
  for (int i = 0; i < c; ++i) unit[i][i] = 1;

  Rat total = 0;
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    std::vector<QVec> sums = {QVec(c, Rat(0))};
    int size = 0;
    for (int i = 0; i < c; ++i) {
      if (!(mask & (1u << i))) continue;
      ++size;
      std::vector<QVec> next;
      next.reserve(sums.size() * polytopes[i].vertices.size());
      for (const auto& s : sums)
        for (const auto& v : polytopes[i].vertices) next.push_back(qadd(s, v));
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sums = std::move(next);
    }
    Rat vol = normalized_volume(convex_hull(c, sums), unit);
    total += ((c - size) % 2 == 0) ? vol : -vol;
  }
  // The alternating sum over lattice-normalized volumes carries an extra c!.
  for (int k = 2; k <= c; ++k) total /= k;
  if (denominator(total) != 1)
    throw computation_error("mixed_volume: non-integer result");
  return numerator(total);
}

}  // namespace tropimp
