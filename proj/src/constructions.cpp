#include "shatter/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "shatter/random_families.hpp"

namespace shatter {

namespace {

Witness below_all_witness(const Family& f) {
  Rat min_y;
  bool first = true;
  for (const auto& b : f.bodies)
    for (const auto& p : b.vertices) {
      if (first || p.y < min_y) min_y = p.y;
      first = false;
    }
  Witness w;
  w.subset = Bitmask(f.size());
  w.halfplane = make_halfplane(Rat(0), Rat(1), Rat(min_y - 1));
  return w;
}

Witness above_all_witness(const Family& f) {
  Rat max_y;
  bool first = true;
  for (const auto& b : f.bodies)
    for (const auto& p : b.vertices) {
      if (first || p.y > max_y) max_y = p.y;
      first = false;
    }
  Witness w;
  w.subset = Bitmask::full(f.size());
  w.halfplane = make_halfplane(Rat(0), Rat(1), Rat(max_y + 1));
  return w;
}

void verify_witness(const Family& f, const Witness& w) {
  for (const auto& b : f.bodies) {
    if (body_in_halfplane(b, w.halfplane) != w.subset.test(b.id))
      throw std::logic_error("witness failed verification");
  }
}

/// Certificate for a general-position family: enumerate, demand full
/// shattering and recompute every quantity from scratch.
ConstructionResult certify_general(Family f, std::string provenance) {
  const int n = f.size();
  ShatterResult sh = is_shattered(f, Bitmask::full(n));
  if (!sh.shattered) throw std::logic_error(provenance + ": family is not shattered");
  std::vector<Witness> witnesses = enumerate_with_witnesses(f);
  for (const auto& w : witnesses) verify_witness(f, w);
  ConstructionResult r;
  r.shattered_subset = Bitmask::full(n);
  r.edge_count = static_cast<long long>(witnesses.size());
  r.intersecting_pairs = count_intersecting_pairs(f);
  r.witnesses = std::move(witnesses);
  r.family = std::move(f);
  r.provenance = std::move(provenance);
  return r;
}

}  // namespace

ConstructionResult gen_unbounded(int n, int cap) {
  if (n < 2) throw CapExceeded("gen_unbounded requires n >= 2");
  if (n > cap) throw CapExceeded("gen_unbounded: n exceeds cap");
  const long long full = (1ll << n) - 1;
  std::vector<Pt> points(full + 1);  // index = subset mask, 1..full-1 used
  for (long long mask = 1; mask < full; ++mask) points[mask] = circle_point(Rat(to_int(mask)));

  std::vector<ConvexBody> bodies;
  for (int j = 0; j < n; ++j) {
    std::vector<Pt> pts;
    for (long long mask = 1; mask < full; ++mask)
      if (mask & (1ll << j)) pts.push_back(points[mask]);
    bodies.push_back(make_body(j, convex_hull(pts)));
  }
  Family fam = make_family(std::move(bodies));

  // One tangent-chord witness per index set: the tangent at the excluded
  // point p_J, pulled inward to the midpoint of the gap, contains every other
  // circle point and nothing else of the construction.
  std::vector<Witness> witnesses;
  for (long long imask = 0; imask <= full; ++imask) {
    Witness w;
    if (imask == 0) {
      w = below_all_witness(fam);
    } else if (imask == full) {
      w = above_all_witness(fam);
    } else {
      long long jmask = full & ~imask;
      const Pt& pj = points[jmask];
      Rat a = pj.x, b = pj.y;
      Rat best;
      bool first = true;
      for (long long mask = 1; mask < full; ++mask) {
        if (mask == jmask) continue;
        Rat v = a * points[mask].x + b * points[mask].y;
        if (first || v > best) best = v;
        first = false;
      }
      if (!(best < 1)) throw std::logic_error("tangent separation failed");
      w.subset = Bitmask(n);
      for (int j = 0; j < n; ++j)
        if (imask & (1ll << j)) w.subset.set(j);
      w.halfplane = make_halfplane(a, b, Rat((best + 1) / 2));
    }
    verify_witness(fam, w);
    witnesses.push_back(std::move(w));
  }

  ConstructionResult r;
  r.shattered_subset = Bitmask::full(n);
  r.edge_count = full + 1;  // every subset realized, and edges are subsets of [n]
  r.intersecting_pairs = count_intersecting_pairs(fam);
  r.witnesses = std::move(witnesses);
  r.family = std::move(fam);
  r.provenance = "unbounded(" + std::to_string(n) + ")";
  return r;
}

LiftResult lift_to_3d(const ConstructionResult& planar) {
  if (planar.family.ambient != Ambient::Planar)
    throw std::invalid_argument("lift_to_3d requires a planar family");
  const int n = planar.family.size();
  std::vector<long long> levels(n);
  for (int i = 0; i < n; ++i) levels[i] = i;
  Family lifted = make_lifted_family(planar.family.bodies, std::move(levels));

  LiftResult out;
  out.report.pairwise_disjoint = true;
  for (int i = 0; i < n && out.report.pairwise_disjoint; ++i)
    for (int j = i + 1; j < n && out.report.pairwise_disjoint; ++j)
      out.report.pairwise_disjoint = !family_bodies_intersect(lifted, i, j);

  // A vertical halfspace a*x + b*y <= c meets a lifted body exactly where the
  // planar halfplane meets its projection, so each planar witness must
  // classify the lifted bodies identically.
  out.report.shattering_preserved = true;
  for (const auto& w : planar.witnesses) {
    for (const auto& b : lifted.bodies) {
      if (body_in_halfplane(b, w.halfplane) != w.subset.test(b.id)) {
        out.report.shattering_preserved = false;
        break;
      }
    }
    if (!out.report.shattering_preserved) break;
    ++out.report.witnesses_checked;
  }
  out.family = std::move(lifted);
  return out;
}

namespace {

ConvexBody body_from(int id, std::initializer_list<std::pair<const char*, const char*>> verts) {
  std::vector<Pt> pts;
  for (const auto& [x, y] : verts) pts.push_back(Pt{parse_rat(x), parse_rat(y)});
  return make_body(id, std::move(pts));
}

}  // namespace

ConstructionResult gen_three_disjoint() {
  std::vector<ConvexBody> bodies;
  bodies.push_back(body_from(0, {{"0", "8"}, {"-2", "5"}, {"3", "5"}}));
  bodies.push_back(body_from(1, {{"-7", "-3"}, {"-4", "-6"}, {"-3", "-2"}}));
  bodies.push_back(body_from(2, {{"6", "-2"}, {"9", "-4"}, {"8", "1"}}));
  ConstructionResult r = certify_general(make_family(std::move(bodies)), "three-disjoint");
  if (r.intersecting_pairs != 0) throw std::logic_error("three-disjoint: bodies must be disjoint");
  return r;
}

ConstructionResult gen_five_segments() {
  // Near-pentagram chords found by search_shattered with the 5-fold symmetric
  // template, rounded to the 1/8 grid and re-verified exactly. Five
  // intersecting pairs, as in the figure.
  std::vector<ConvexBody> bodies;
  bodies.push_back(body_from(0, {{"-2", "-11/8"}, {"33/8", "-15/8"}}));
  bodies.push_back(body_from(1, {{"3/4", "-19/8"}, {"25/8", "27/8"}}));
  bodies.push_back(body_from(2, {{"5/2", "0"}, {"-9/4", "4"}}));
  bodies.push_back(body_from(3, {{"7/8", "9/4"}, {"-9/2", "-7/8"}}));
  bodies.push_back(body_from(4, {{"-15/8", "3/2"}, {"-1/2", "-9/2"}}));
  ConstructionResult r = certify_general(make_family(std::move(bodies)), "five-segments");
  if (r.intersecting_pairs != 5)
    throw std::logic_error("five-segments: expected five intersecting pairs");
  return r;
}

ConstructionResult gen_four_one_intersection() {
  // Found by search_shattered(4, segments, max_intersections = 1); the Turan
  // bound forces at least one intersecting pair, so this is minimal.
  std::vector<ConvexBody> bodies;
  bodies.push_back(body_from(0, {{"93/16", "19/8"}, {"15/32", "69/16"}}));
  bodies.push_back(body_from(1, {{"67/16", "23/4"}, {"9/16", "97/16"}}));
  bodies.push_back(body_from(2, {{"9/8", "39/16"}, {"3/16", "1"}}));
  bodies.push_back(body_from(3, {{"49/8", "99/16"}, {"7/16", "31/8"}}));
  ConstructionResult r = certify_general(make_family(std::move(bodies)), "four-one-intersection");
  if (r.intersecting_pairs != 1)
    throw std::logic_error("four-one-intersection: expected exactly one intersecting pair");
  return r;
}

namespace {

struct SearchState {
  Family family;
  long long traces = -1;  // realized trace count on the full set, -1 = invalid
};

long long evaluate_candidate(const Family& f, SearchClass cls, const SearchConstraints& cons,
                             bool* feasible) {
  *feasible = false;
  if (cls == SearchClass::DisjointConvex) {
    for (int i = 0; i < f.size(); ++i)
      for (int j = i + 1; j < f.size(); ++j)
        if (bodies_intersect(f.bodies[i], f.bodies[j])) return -1;
  }
  if (cons.max_intersections) {
    if (count_intersecting_pairs(f) > *cons.max_intersections) return -1;
  }
  EdgeSet es;
  try {
    es = enumerate_realized(f);
  } catch (const GeneralPositionViolation&) {
    return -1;
  }
  *feasible = true;
  return static_cast<long long>(es.size());  // shattered iff == 2^n
}

std::pair<Rat, Rat> rotation_cos_sin(int s) {
  double t = std::tan(M_PI / s);
  Rat tr = make_rat(std::llround(t * 256), 256);
  Rat den = 1 + tr * tr;
  return {Rat((1 - tr * tr) / den), Rat(2 * tr / den)};
}

Pt rotate(const std::pair<Rat, Rat>& cs, const Pt& p) {
  return Pt{Rat(cs.first * p.x - cs.second * p.y), Rat(cs.second * p.x + cs.first * p.y)};
}

Family symmetric_segment_family(const Pt& a, const Pt& b, int n, int s) {
  auto cs = rotation_cos_sin(s);
  std::vector<ConvexBody> bodies;
  Pt pa = a, pb = b;
  for (int k = 0; k < n; ++k) {
    bodies.push_back(ConvexBody{k, {pa, pb}});
    pa = rotate(cs, pa);
    pb = rotate(cs, pb);
  }
  return make_family(std::move(bodies));
}

uint64_t below(std::mt19937_64& g, uint64_t n) { return g() % n; }

Rat grid64(std::mt19937_64& g) {
  return make_rat(static_cast<long long>(below(g, 2 * 8 * 64 + 1)) - 8 * 64, 64);
}

}  // namespace

std::optional<ConstructionResult> search_shattered(int n, SearchClass cls,
                                                   const SearchConstraints& cons, uint64_t seed,
                                                   long long budget) {
  if (n < 1 || budget < 1) throw std::invalid_argument("search_shattered: n >= 1, budget >= 1");
  std::mt19937_64 g(seed);
  const long long target = 1ll << n;

  // Segment seeds for the symmetric template live on the /64 grid; the
  // rotation is an exact rational approximation of 2*pi/s.
  Pt seed_a, seed_b;
  auto make_candidate = [&](bool restart, Family* cur) -> std::optional<Family> {
    try {
      if (cls == SearchClass::Segments && cons.symmetry) {
        if (restart) {
          seed_a = Pt{grid64(g), grid64(g)};
          seed_b = Pt{grid64(g), grid64(g)};
        } else {
          Rat step = make_rat(1 + static_cast<long long>(below(g, 32)), 64);
          Pt& target_pt = (below(g, 2) == 0) ? seed_a : seed_b;
          Rat dx = step * make_rat(static_cast<long long>(below(g, 3)) - 1);
          Rat dy = step * make_rat(static_cast<long long>(below(g, 3)) - 1);
          target_pt.x += dx;
          target_pt.y += dy;
        }
        if (seed_a == seed_b) return std::nullopt;
        return symmetric_segment_family(seed_a, seed_b, n, *cons.symmetry);
      }
      if (restart) {
        uint64_t sub = g();
        Family f;
        switch (cls) {
          case SearchClass::Segments:
            f = random_segment_family(n, sub);
            break;
          case SearchClass::DisjointConvex:
            f = random_polygon_family(n, sub, true);
            break;
          case SearchClass::Convex:
            f = random_polygon_family(n, sub, false);
            break;
        }
        return f;
      }
      // local move: shift one vertex on a halving grid step
      Family f = *cur;
      int b = static_cast<int>(below(g, f.size()));
      auto& verts = f.bodies[b].vertices;
      int v = static_cast<int>(below(g, verts.size()));
      long long denom_shift = below(g, 5);  // steps 1/16 .. 1/256
      Rat step = make_rat(1, 16ll << denom_shift);
      verts[v].x += step * make_rat(static_cast<long long>(below(g, 3)) - 1);
      verts[v].y += step * make_rat(static_cast<long long>(below(g, 3)) - 1);
      make_body(f.bodies[b].id, verts);  // revalidate convexity
      return f;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };

  Family current;
  long long current_score = -1;
  long long used = 0;
  int plateau = 0;
  bool have_current = false;

  while (used < budget) {
    bool restart = !have_current || plateau > 120;
    if (restart) plateau = 0;
    auto cand = make_candidate(restart, have_current ? &current : nullptr);
    ++used;
    if (!cand) continue;
    bool feasible = false;
    long long score = evaluate_candidate(*cand, cls, cons, &feasible);
    if (score > current_score || restart) {
      if (score >= 0) {
        current = std::move(*cand);
        current_score = score;
        have_current = true;
        plateau = 0;
      }
    } else {
      ++plateau;
    }
    if (feasible && score == target) {
      try {
        ConstructionResult r = certify_general(current, "search");
        if (cons.max_intersections && r.intersecting_pairs > *cons.max_intersections)
          continue;  // post-verification of constraints
        if (cls == SearchClass::DisjointConvex && r.intersecting_pairs != 0) continue;
        return r;
      } catch (const std::exception&) {
        continue;
      }
    }
  }
  return std::nullopt;
}

}  // namespace shatter
