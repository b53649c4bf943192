#include "tropimp/pushforward.hpp"

#include <algorithm>
#include <map>

#include "tropimp/lattice.hpp"
#include "tropimp/linalg.hpp"
#include "tropimp/parallel.hpp"

namespace tropimp {

namespace {

IVec apply_map(const IMat& matrix, const IVec& v) {
  IVec out(matrix.size(), Int(0));
  for (std::size_t r = 0; r < matrix.size(); ++r)
    out[r] = dot(matrix[r], v);
  return out;
}

struct ImageCone {
  int source = -1;     // index into fan.cones
  ConeData data;       // image cone in R^r
  Int index_factor;    // index of the image of the source span lattice
};

struct Piece {
  std::vector<IVec> rays;  // extreme rays, sorted
  IMat ineqs;              // valid inequalities cutting it out of the group span
};

// Splits a piece by u = 0 when its rays lie strictly on both sides.
void split_piece(int r, const IMat& span_eqs, const Piece& piece, const IVec& u,
                 std::vector<Piece>& out) {
  bool pos = false, neg = false;
  for (const auto& ray : piece.rays) {
    Int s = dot(u, ray);
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (!pos || !neg) {
    out.push_back(piece);
    return;
  }
  for (int side = 0; side < 2; ++side) {
    IVec cut = side == 0 ? u : negate(u);
    std::vector<IVec> rows;
    for (const auto& e : span_eqs) {
      rows.push_back(e);
      rows.push_back(negate(e));
    }
    rows.insert(rows.end(), piece.ineqs.begin(), piece.ineqs.end());
    rows.push_back(cut);
    GeneratorDescription gen = dual_description(r, rows);
    Piece half;
    for (const auto& ray : gen.rays) half.rays.push_back(ray.v);
    std::sort(half.rays.begin(), half.rays.end());
    half.ineqs = piece.ineqs;
    half.ineqs.push_back(cut);
    out.push_back(std::move(half));
  }
}

}  // namespace

WeightedFan push_forward(const WeightedFan& fan, const MonomialMap& map,
                         const Int& delta, int threads) {
  const int p = fan.ambient;
  const int r = map.rows();
  const int d = fan.dim;
  if (map.cols() != p)
    throw input_error("push-forward: matrix has " + std::to_string(map.cols()) +
                      " columns but the fan lives in dimension " + std::to_string(p));
  if (delta < 1) throw input_error("push-forward: delta must be positive");
  if (d > r)
    throw input_error("push-forward: fan dimension exceeds the target dimension");

  if (fan.cones.empty()) return make_fan(r, d, {}, {});

  // Image cones with their span-lattice index factors.
  std::vector<ImageCone> images(fan.cones.size());
  parallel_for(static_cast<int>(fan.cones.size()), threads, [&](int i) {
    Cone src = fan.cone_at(i);
    IMat gens;
    for (const auto& ray : src.rays) gens.push_back(apply_map(map.matrix, ray));
    ImageCone ic;
    ic.source = i;
    ic.data = cone_from_generators(r, gens);
    if (ic.data.dim == d) {
      if (!ic.data.cone.lineality.empty())
        throw computation_error("push-forward: an image cone contains a line");
      IMat src_lattice = saturated_span_lattice(src.rays, p);
      IMat image_of_lattice;
      for (const auto& b : src_lattice)
        image_of_lattice.push_back(apply_map(map.matrix, b));
      IMat target = saturated_span_lattice(ic.data.cone.rays, r);
      ic.index_factor = lattice_index(target, image_of_lattice);
    }
    images[i] = std::move(ic);
  });

  // Group the d-dimensional image cones by their span.
  std::map<IMat, std::vector<int>> groups;  // span lattice basis -> image idx
  bool any_full = false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].data.dim != d) continue;
    any_full = true;
    IMat key = saturated_span_lattice(images[i].data.cone.rays, r);
    groups[key].push_back(static_cast<int>(i));
  }
  if (!any_full)
    throw computation_error(
        "push-forward: degenerate fiber (every image cone drops dimension)");

  struct GroupResult {
    std::vector<std::vector<IVec>> cones;
    std::vector<Int> mults;
  };
  std::vector<const IMat*> group_keys;
  std::vector<const std::vector<int>*> group_members;
  for (const auto& [key, members] : groups) {
    group_keys.push_back(&key);
    group_members.push_back(&members);
  }
  std::vector<GroupResult> results(groups.size());

  parallel_for(static_cast<int>(groups.size()), threads, [&](int g) {
    const IMat& span_basis = *group_keys[g];
    const std::vector<int>& members = *group_members[g];
    IMat span_eqs = integer_kernel(span_basis, r);

    // Cut hyperplanes: every facet functional appearing in the group.
    IMat cuts;
    {
      std::map<IVec, bool> seen;
      for (int mi : members) {
        for (const auto& u : images[mi].data.hrep.ineqs) {
          IVec key = primitive(u);
          IVec flipped = negate(key);
          if (flipped < key) key = flipped;
          if (seen.emplace(key, true).second) cuts.push_back(key);
        }
      }
    }

    // Refine each member by the group arrangement; identical cells merge.
    std::map<std::vector<IVec>, Int> cell_mult;
    std::vector<std::vector<IVec>> cell_order;
    for (int mi : members) {
      std::vector<Piece> pieces;
      Piece start;
      start.rays = images[mi].data.cone.rays;
      start.ineqs = images[mi].data.hrep.ineqs;
      pieces.push_back(std::move(start));
      for (const auto& u : cuts) {
        std::vector<Piece> next;
        for (const auto& piece : pieces) split_piece(r, span_eqs, piece, u, next);
        pieces = std::move(next);
      }
      for (auto& piece : pieces) {
        if (cell_mult.count(piece.rays)) continue;
        // Contribution of every member whose image contains this cell.
        Int total = 0;
        for (int mj : members) {
          bool inside = true;
          for (const auto& ray : piece.rays) {
            if (!cone_contains(images[mj].data.hrep, ray)) {
              inside = false;
              break;
            }
          }
          if (inside)
            total += fan.multiplicities[images[mj].source] * images[mj].index_factor;
        }
        if (total % delta != 0)
          throw computation_error(
              "push-forward: multiplicity is not divisible by delta (degree " +
              delta.str() + " inconsistent with the fan)");
        cell_mult.emplace(piece.rays, total / delta);
        cell_order.push_back(piece.rays);
      }
    }

    // Merge cells with equal multiplicity across redundant walls.
    struct Cell {
      ConeData data;
      Int mult;
    };
    std::vector<Cell> cells;
    for (const auto& rays : cell_order) {
      Cell cell;
      cell.data = cone_from_generators(r, rays);
      cell.mult = cell_mult[rays];
      cells.push_back(std::move(cell));
    }
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i < cells.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < cells.size() && !merged; ++j) {
          if (cells[i].mult != cells[j].mult) continue;
          IMat both = cells[i].data.cone.rays;
          both.insert(both.end(), cells[j].data.cone.rays.begin(),
                      cells[j].data.cone.rays.end());
          ConeData united = cone_from_generators(r, both);
          if (united.dim != d || !united.cone.lineality.empty()) continue;
          // The union is the hull exactly when some facet hyperplane of one
          // cell separates the two and the hull splits back into them.
          const IMat& walls = cells[i].data.hrep.ineqs;
          bool ok = false;
          for (const auto& w : walls) {
            bool other_side = true;
            for (const auto& ray : cells[j].data.cone.rays)
              if (dot(w, ray) > 0) { other_side = false; break; }
            if (!other_side) continue;
            IMat rows;
            for (const auto& e : span_eqs) {
              rows.push_back(e);
              rows.push_back(negate(e));
            }
            for (const auto& u : united.hrep.ineqs) rows.push_back(u);
            IMat rows_pos = rows;
            rows_pos.push_back(w);
            IMat rows_neg = rows;
            rows_neg.push_back(negate(w));
            GeneratorDescription pos = dual_description(r, rows_pos);
            GeneratorDescription neg = dual_description(r, rows_neg);
            IMat pos_rays, neg_rays;
            for (const auto& ray : pos.rays) pos_rays.push_back(ray.v);
            for (const auto& ray : neg.rays) neg_rays.push_back(ray.v);
            std::sort(pos_rays.begin(), pos_rays.end());
            std::sort(neg_rays.begin(), neg_rays.end());
            if (pos_rays == cells[i].data.cone.rays &&
                neg_rays == cells[j].data.cone.rays) {
              ok = true;
              break;
            }
          }
          if (!ok) continue;
          Cell replacement;
          replacement.data = std::move(united);
          replacement.mult = cells[i].mult;
          cells.erase(cells.begin() + j);
          cells.erase(cells.begin() + i);
          cells.push_back(std::move(replacement));
          merged = true;
        }
      }
    }

    for (const auto& cell : cells) {
      results[g].cones.push_back(cell.data.cone.rays);
      results[g].mults.push_back(cell.mult);
    }
  });

  std::vector<std::vector<IVec>> all_cones;
  std::vector<Int> all_mults;
  for (const auto& gr : results) {
    all_cones.insert(all_cones.end(), gr.cones.begin(), gr.cones.end());
    all_mults.insert(all_mults.end(), gr.mults.begin(), gr.mults.end());
  }
  return make_fan(r, d, all_cones, all_mults);
}

}  // namespace tropimp
