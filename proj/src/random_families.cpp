#include "shatter/random_families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "flat.hpp"

namespace shatter {

namespace {

uint64_t below(std::mt19937_64& g, uint64_t n) { return g() % n; }

Rat grid_rat(std::mt19937_64& g, long long lo, long long hi, long long den) {
  // uniform over the grid {k/den : lo*den <= k <= hi*den}
  long long span = (hi - lo) * den + 1;
  return make_rat(lo * den + static_cast<long long>(below(g, span)), den);
}

constexpr long long kDen = 1024;  // fine grid keeps accidental collinearity rare
constexpr long long kCell = 8;    // cell side; bodies live in [o+2, o+6]^2

Pt cell_point(std::mt19937_64& g, long long ox, long long oy) {
  return Pt{grid_rat(g, ox + 2, ox + 6, kDen), grid_rat(g, oy + 2, oy + 6, kDen)};
}

std::vector<Pt> sample_body_vertices(std::mt19937_64& g, long long ox, long long oy, int kind,
                                     int max_poly_vertices) {
  if (kind == 0) return {cell_point(g, ox, oy)};
  if (kind == 1) {
    for (int tries = 0; tries < 64; ++tries) {
      Pt a = cell_point(g, ox, oy);
      Pt b = cell_point(g, ox, oy);
      Rat len = std::max(rat_abs(a.x - b.x), rat_abs(a.y - b.y));
      if (len >= make_rat(1, 2)) return {a, b};
    }
    throw std::logic_error("segment sampling failed");
  }
  // polygon: hull of a handful of points, retried until it has enough spread
  int want = kind == 2 ? 3 : 3 + static_cast<int>(below(g, max_poly_vertices - 2));
  for (int tries = 0; tries < 64; ++tries) {
    std::vector<Pt> pts;
    for (int i = 0; i < want + 3; ++i) pts.push_back(cell_point(g, ox, oy));
    std::vector<Pt> hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    if (hull.size() > static_cast<size_t>(want)) hull.resize(want);  // may break convexity; recheck
    std::vector<Pt> rehull = convex_hull(hull);
    if (rehull.size() < 3) continue;
    // insist on a non-sliver triangle so later nudges cannot flip orientation
    Rat area2 = (rehull[1].x - rehull[0].x) * (rehull[2].y - rehull[0].y) -
                (rehull[1].y - rehull[0].y) * (rehull[2].x - rehull[0].x);
    if (rat_abs(area2) < make_rat(1, 2)) continue;
    return rehull;
  }
  throw std::logic_error("polygon sampling failed");
}

/// Deterministic nudge loop: move the later vertex of each duplicate pair or
/// the third point of each collinear triple by a tiny rational until the
/// family is in strict general position.
void repair_general_position(Family& f) {
  for (int round = 0; round < 400; ++round) {
    auto flat = detail::flatten(f);
    auto issue = detail::find_duplicate(flat);
    if (issue.kind == detail::GpIssue::None) issue = detail::find_collinear_distinct(flat);
    if (issue.kind == detail::GpIssue::None) return;
    int vidx = issue.kind == detail::GpIssue::Duplicate ? issue.b : issue.c;
    int b = flat.body_of[vidx];
    int local = vidx - flat.body_start[b];
    f.bodies[b].vertices[local].x += make_rat(1 + (round % 5), 1ll << 22);
    f.bodies[b].vertices[local].y += make_rat(1, 1ll << (23 + (round % 8)));
  }
  throw std::logic_error("general position repair did not converge");
}

void validate_bodies(const Family& f) {
  for (const auto& b : f.bodies) make_body(b.id, b.vertices);
}

std::vector<std::pair<long long, long long>> shuffled_cells(std::mt19937_64& g, int n) {
  int side = 1;
  while (side * side < n) ++side;
  std::vector<std::pair<long long, long long>> cells;
  for (int cx = 0; cx < side; ++cx)
    for (int cy = 0; cy < side; ++cy) cells.emplace_back(cx * kCell, cy * kCell);
  for (size_t i = cells.size(); i > 1; --i) std::swap(cells[i - 1], cells[below(g, i)]);
  cells.resize(n);
  return cells;
}

}  // namespace

Family random_disjoint_family(int n, uint64_t seed) {
  std::mt19937_64 g(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    try {
      auto cells = shuffled_cells(g, n);
      std::vector<ConvexBody> bodies;
      for (int i = 0; i < n; ++i) {
        int kind = static_cast<int>(below(g, 3));
        bodies.push_back(
            ConvexBody{i, sample_body_vertices(g, cells[i].first, cells[i].second, kind, 3)});
      }
      Family f = make_family(std::move(bodies));
      repair_general_position(f);
      validate_bodies(f);
      return f;
    } catch (const std::exception&) {
      continue;  // fresh randomness from the same stream
    }
  }
  throw std::logic_error("random_disjoint_family failed to produce a valid family");
}

Family random_segment_family(int n, uint64_t seed) {
  std::mt19937_64 g(seed);
  long long side = 8;
  while (side * side < 16 * n) side += 4;
  for (int attempt = 0; attempt < 32; ++attempt) {
    try {
      std::vector<ConvexBody> bodies;
      for (int i = 0; i < n; ++i) {
        for (int tries = 0;; ++tries) {
          Pt a{grid_rat(g, 0, side, kDen), grid_rat(g, 0, side, kDen)};
          Pt b{grid_rat(g, 0, side, kDen), grid_rat(g, 0, side, kDen)};
          if (std::max(rat_abs(a.x - b.x), rat_abs(a.y - b.y)) >= 1) {
            bodies.push_back(ConvexBody{i, {a, b}});
            break;
          }
          if (tries > 64) throw std::logic_error("segment sampling failed");
        }
      }
      Family f = make_family(std::move(bodies));
      repair_general_position(f);
      validate_bodies(f);
      return f;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::logic_error("random_segment_family failed to produce a valid family");
}

Family random_polygon_family(int n, uint64_t seed, bool disjoint, int max_vertices) {
  std::mt19937_64 g(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    try {
      std::vector<ConvexBody> bodies;
      if (disjoint) {
        auto cells = shuffled_cells(g, n);
        for (int i = 0; i < n; ++i)
          bodies.push_back(ConvexBody{
              i, sample_body_vertices(g, cells[i].first, cells[i].second, 3, max_vertices)});
      } else {
        for (int i = 0; i < n; ++i)
          bodies.push_back(ConvexBody{i, sample_body_vertices(g, 0, 0, 3, max_vertices)});
      }
      Family f = make_family(std::move(bodies));
      repair_general_position(f);
      validate_bodies(f);
      return f;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::logic_error("random_polygon_family failed to produce a valid family");
}

Family random_family_with_interior_body(int n_outer, uint64_t seed) {
  if (n_outer < 3) throw std::invalid_argument("need at least 3 outer bodies");
  std::mt19937_64 g(seed);
  int side = 3;
  while (4 * (side - 1) < n_outer) ++side;
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      // perimeter cells, with three forced far-apart anchors so the hull
      // always surrounds the center cell
      std::vector<std::pair<long long, long long>> perimeter;
      for (int cx = 0; cx < side; ++cx)
        for (int cy = 0; cy < side; ++cy)
          if (cx == 0 || cy == 0 || cx == side - 1 || cy == side - 1)
            perimeter.emplace_back(cx * kCell, cy * kCell);
      std::vector<std::pair<long long, long long>> chosen = {
          {0, 0}, {(side - 1) * kCell, 0}, {(side / 2) * kCell, (side - 1) * kCell}};
      for (size_t i = perimeter.size(); i > 1; --i) std::swap(perimeter[i - 1], perimeter[below(g, i)]);
      for (const auto& c : perimeter) {
        if (static_cast<int>(chosen.size()) >= n_outer) break;
        if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
      }
      std::vector<ConvexBody> bodies;
      for (int i = 0; i < n_outer; ++i) {
        int kind = static_cast<int>(below(g, 3));
        bodies.push_back(
            ConvexBody{i, sample_body_vertices(g, chosen[i].first, chosen[i].second, kind, 3)});
      }
      long long cx = (side / 2) * kCell, cy = (side / 2) * kCell;
      std::vector<Pt> inner = {Pt{make_rat(cx + 4), make_rat(cy + 4)},
                               Pt{make_rat(cx * 2 + 9, 2), make_rat(cy + 4)},
                               Pt{make_rat(cx + 4), make_rat(cy * 2 + 9, 2)}};
      bodies.push_back(ConvexBody{n_outer, inner});
      Family f = make_family(std::move(bodies));
      repair_general_position(f);
      validate_bodies(f);
      // the inner body must be strictly inside the hull of the outer ones
      std::vector<Pt> outer_pts;
      for (int i = 0; i < n_outer; ++i)
        for (const auto& p : f.bodies[i].vertices) outer_pts.push_back(p);
      std::vector<Pt> hull = convex_hull(outer_pts);
      if (hull.size() < 3) continue;
      bool strict = true;
      for (const auto& p : f.bodies[n_outer].vertices) {
        for (size_t e = 0; e < hull.size() && strict; ++e)
          strict = orientation(hull[e], hull[(e + 1) % hull.size()], p) > 0;
      }
      if (!strict) continue;
      bool disjoint_ok = true;
      for (int i = 0; i < n_outer && disjoint_ok; ++i)
        disjoint_ok = !bodies_intersect(f.bodies[i], f.bodies[n_outer]);
      if (!disjoint_ok) continue;
      return f;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::logic_error("random_family_with_interior_body failed");
}

}  // namespace shatter
