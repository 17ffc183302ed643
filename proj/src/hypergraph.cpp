#include "shatter/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "flat.hpp"

namespace shatter {

EdgeSet::EdgeSet(int n, std::vector<Bitmask> edges) : n_(n), edges_(std::move(edges)) {
  Bitmask empty(n_);
  Bitmask full = Bitmask::full(n_);
  edges_.push_back(empty);
  edges_.push_back(full);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Bitmask& m) const {
  return std::binary_search(edges_.begin(), edges_.end(), m);
}

namespace {

void require_planar(const Family& f, const char* op) {
  if (f.ambient != Ambient::Planar)
    throw std::invalid_argument(std::string(op) + " requires a planar family");
}

void require_collinear_free(const Family& f) {
  GpReport rep = check_collinear_free(f);
  if (!rep.ok) throw GeneralPositionViolation(std::move(rep));
}

bool all_segments(const Family& f) {
  for (const auto& b : f.bodies)
    if (b.kind() != BodyKind::Segment) return false;
  return !f.bodies.empty();
}

/// Exact rotation certificate. Pushes the tail point along the left normal of
/// u->v and halves the step until classification against the rotated line
/// matches `expect`; v stays on the boundary, u lands strictly right.
Witness rotate_witness(const Family& f, const Pt& u, const Pt& v, const Bitmask& expect) {
  Rat dx = v.x - u.x, dy = v.y - u.y;
  Rat eta(1);
  for (int iter = 0; iter < 512; ++iter) {
    Pt u2{Rat(u.x - eta * dy), Rat(u.y + eta * dx)};
    Rat ddx = v.x - u2.x, ddy = v.y - u2.y;
    Halfplane h = make_halfplane(ddy, -ddx, ddy * v.x - ddx * v.y);
    bool match = true;
    for (const auto& body : f.bodies) {
      if (body_in_halfplane(body, h) != expect.test(body.id)) {
        match = false;
        break;
      }
    }
    if (match) return Witness{expect, h, std::make_pair(u, v)};
    eta /= 2;
  }
  throw std::logic_error("rotation certificate did not stabilize");
}

Witness trivial_witness(const Family& f, bool full) {
  int n = f.size();
  Rat bound(0);
  bool first = true;
  for (const auto& b : f.bodies) {
    for (const auto& p : b.vertices) {
      if (first || (full ? p.y > bound : p.y < bound)) bound = p.y;
      first = false;
    }
  }
  Rat c = full ? Rat(bound + 1) : Rat(bound - 1);
  Witness w;
  w.subset = full ? Bitmask::full(n) : Bitmask(n);
  w.halfplane = make_halfplane(Rat(0), Rat(1), c);
  return w;
}

long long tangent_bound(long long n) { return 2 * n * (n - 1) + 2; }

}  // namespace

EdgeSet enumerate_realized(const Family& f) {
  require_planar(f, "enumerate_realized");
  require_collinear_free(f);
  auto flat = detail::flatten(f);
  std::unordered_set<Bitmask, BitmaskHash> seen;
  detail::scan_candidates(flat, [&](const Bitmask& mask, int, int) {
    seen.insert(mask);
    return true;
  });
  std::vector<Bitmask> edges(seen.begin(), seen.end());
  EdgeSet result(f.size(), std::move(edges));
  if (all_segments(f) && detail::find_duplicate(flat).kind == detail::GpIssue::None) {
    if (static_cast<long long>(result.size()) > tangent_bound(f.size()))
      throw std::logic_error("tangent bound exceeded: enumeration is unsound");
  }
  return result;
}

std::vector<Witness> enumerate_with_witnesses(const Family& f) {
  require_planar(f, "enumerate_with_witnesses");
  require_collinear_free(f);
  auto flat = detail::flatten(f);
  std::unordered_set<Bitmask, BitmaskHash> seen;
  std::vector<Witness> out;
  out.push_back(trivial_witness(f, false));
  seen.insert(out.back().subset);
  Bitmask full = Bitmask::full(f.size());
  if (!(full == out.back().subset)) {
    out.push_back(trivial_witness(f, true));
    seen.insert(out.back().subset);
  }
  detail::scan_candidates(flat, [&](const Bitmask& mask, int i, int j) {
    if (!seen.count(mask)) {
      Witness w =
          rotate_witness(f, detail::vertex_point(flat, i), detail::vertex_point(flat, j), mask);
      seen.insert(mask);
      out.push_back(std::move(w));
    }
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const Witness& a, const Witness& b) { return a.subset < b.subset; });
  return out;
}

std::optional<Witness> realize_witness(const Family& f, const Bitmask& subset) {
  require_planar(f, "realize_witness");
  require_collinear_free(f);
  if (subset.none()) return trivial_witness(f, false);
  if (subset.all()) return trivial_witness(f, true);
  auto flat = detail::flatten(f);
  std::optional<Witness> found;
  detail::scan_candidates(flat, [&](const Bitmask& mask, int i, int j) {
    if (mask == subset) {
      found = rotate_witness(f, detail::vertex_point(flat, i), detail::vertex_point(flat, j), mask);
      return false;
    }
    return true;
  });
  return found;
}

namespace {

std::vector<int> mask_positions(const Bitmask& x) {
  std::vector<int> pos;
  for (int i = 0; i < x.size(); ++i)
    if (x.test(i)) pos.push_back(i);
  return pos;
}

uint32_t project_trace(const Bitmask& edge, const std::vector<int>& pos) {
  uint32_t t = 0;
  for (size_t i = 0; i < pos.size(); ++i)
    if (edge.test(pos[i])) t |= (1u << i);
  return t;
}

bool shattered_on(const EdgeSet& es, const std::vector<int>& pos, uint32_t* first_missing) {
  const uint32_t want = 1u << pos.size();
  std::vector<char> hit(want, 0);
  uint32_t found = 0;
  for (const auto& e : es.edges()) {
    uint32_t t = project_trace(e, pos);
    if (!hit[t]) {
      hit[t] = 1;
      if (++found == want) return true;
    }
  }
  if (first_missing) {
    for (uint32_t t = 0; t < want; ++t) {
      if (!hit[t]) {
        *first_missing = t;
        break;
      }
    }
  }
  return false;
}

}  // namespace

ShatterResult is_shattered(const Family& f, const Bitmask& x) {
  require_planar(f, "is_shattered");
  if (x.count() > 30) throw std::invalid_argument("shattering check limited to 30 bodies");
  EdgeSet es = enumerate_realized(f);
  auto pos = mask_positions(x);
  uint32_t missing = 0;
  if (shattered_on(es, pos, &missing)) {
    if (x.all() && f.size() > 0) {
      // Shattering forces the hull-contact and intersection-count lemmas;
      // a violation here would mean the enumeration itself is broken.
      if (!hull_lemma_check(f).ok)
        throw std::logic_error("shattered family violates the convex hull lemma");
      Rat need = turan_lower_bound(f.size());
      if (Rat(count_intersecting_pairs(f)) < need)
        throw std::logic_error("shattered family violates the intersection lower bound");
    }
    return ShatterResult{true, Bitmask(f.size())};
  }
  Bitmask miss(f.size());
  for (size_t i = 0; i < pos.size(); ++i)
    if (missing & (1u << i)) miss.set(pos[i]);
  return ShatterResult{false, miss};
}

VcResult vc_dimension(const Family& f, int cap) {
  require_planar(f, "vc_dimension");
  const int n = f.size();
  if (n > 62) throw std::invalid_argument("vc_dimension supports at most 62 bodies");
  EdgeSet es = enumerate_realized(f);
  int kmax = std::min(cap, n);
  while (kmax > 0 && (1ull << kmax) > es.size()) --kmax;
  for (int k = kmax; k >= 1; --k) {
    // subsets of size k in ascending numeric order (Gosper's hack)
    uint64_t x = (k == 0) ? 0 : ((uint64_t{1} << k) - 1);
    uint64_t limit = (n == 64) ? ~uint64_t{0} : (uint64_t{1} << n);
    while (x < limit) {
      Bitmask xm(n);
      for (int i = 0; i < n; ++i)
        if (x & (uint64_t{1} << i)) xm.set(i);
      auto pos = mask_positions(xm);
      if (shattered_on(es, pos, nullptr)) return VcResult{k, xm};
      uint64_t c = x & -x;
      uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return VcResult{0, Bitmask(n)};
}

int count_intersecting_pairs(const Family& f) {
  require_planar(f, "count_intersecting_pairs");
  int count = 0;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j)
      if (bodies_intersect(f.bodies[i], f.bodies[j])) ++count;
  return count;
}

Rat turan_lower_bound(long long n) {
  if (n < 0) throw std::invalid_argument("turan_lower_bound requires n >= 0");
  Rat num(to_int(n) * to_int(n - 3));
  return num / 6;
}

namespace {

bool point_on_hull_boundary(const std::vector<Pt>& hull, const Pt& p) {
  if (hull.size() == 1) return p == hull[0];
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    if (hull.size() == 2 && i == 1) break;
    if (orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
      return true;
  }
  return false;
}

}  // namespace

HullLemmaResult hull_lemma_check(const Family& f) {
  require_planar(f, "hull_lemma_check");
  std::vector<Pt> all;
  for (const auto& b : f.bodies)
    for (const auto& p : b.vertices) all.push_back(p);
  if (all.empty()) return {};
  std::vector<Pt> hull = convex_hull(all);
  for (const auto& b : f.bodies) {
    bool touches = false;
    for (const auto& p : b.vertices) {
      if (point_on_hull_boundary(hull, p)) {
        touches = true;
        break;
      }
    }
    if (!touches) return HullLemmaResult{false, b.id};
  }
  return {};
}

namespace {

// Oracle trial layout: six pseudo-random words drawn per trial regardless of
// the branch taken, so the stream is reproducible.
struct TrialWords {
  uint64_t w[6];
};

class OracleFast {
 public:
  explicit OracleFast(const detail::FlatFamily& flat) : flat_(flat) {
    for (int i = 0; i < flat.V; ++i) {
      min_x_ = std::min(min_x_, flat.xs[i]);
      max_x_ = std::max(max_x_, flat.xs[i]);
      min_y_ = std::min(min_y_, flat.ys[i]);
      max_y_ = std::max(max_y_, flat.ys[i]);
    }
  }

  std::optional<Bitmask> trial(const TrialWords& t) {
    if ((t.w[0] & 1) == 0) return pair_rotation(t);
    return random_direction(t);
  }

 private:
  std::optional<Bitmask> pair_rotation(const TrialWords& t) {
    const int V = flat_.V;
    int i = static_cast<int>(t.w[1] % V);
    int j = static_cast<int>(t.w[2] % V);
    long long ux = flat_.xs[i], uy = flat_.ys[i];
    long long vx = flat_.xs[j], vy = flat_.ys[j];
    if (ux == vx && uy == vy) return std::nullopt;
    long long dx = vx - ux, dy = vy - uy;
    int e = 1 + static_cast<int>(t.w[3] % 40);
    long long sigma = ((t.w[3] >> 8) & 1) ? 1 : -1;
    __int128 ddx = (static_cast<__int128>(dx) << e) + sigma * dy;
    __int128 ddy = (static_cast<__int128>(dy) << e) - sigma * dx;
    __int128 a = ddy, b = -ddx;
    __int128 c = a * vx + b * vy;
    if (t.w[4] & 1) {
      int tt = static_cast<int>((t.w[4] >> 1) % 96);
      __int128 shift = static_cast<__int128>(1) << tt;
      c += ((t.w[4] >> 50) & 1) ? shift : -shift;
    }
    return classify(a, b, c, 0);
  }

  std::optional<Bitmask> random_direction(const TrialWords& t) {
    long long a = static_cast<long long>(t.w[1] % ((1u << 20) + 1)) - (1 << 19);
    long long b = static_cast<long long>(t.w[2] % ((1u << 20) + 1)) - (1 << 19);
    if (a == 0 && b == 0) a = 1;
    long long r = static_cast<long long>(t.w[3] % ((1u << 20) + 1));
    long long s = static_cast<long long>(t.w[4] % ((1u << 20) + 1));
    __int128 qx = (static_cast<__int128>(min_x_) << 20) + static_cast<__int128>(r) * (max_x_ - min_x_);
    __int128 qy = (static_cast<__int128>(min_y_) << 20) + static_cast<__int128>(s) * (max_y_ - min_y_);
    __int128 c = static_cast<__int128>(a) * qx + static_cast<__int128>(b) * qy;
    return classify(a, b, c, 20);
  }

  std::optional<Bitmask> classify(__int128 a, __int128 b, __int128 c, int lhs_shift) {
    Bitmask mask(flat_.n);
    for (int body = 0; body < flat_.n; ++body) {
      bool in = true;
      for (int k = flat_.body_start[body]; k < flat_.body_start[body + 1]; ++k) {
        __int128 lhs = (a * flat_.xs[k] + b * flat_.ys[k]) << lhs_shift;
        if (lhs > c) {
          in = false;
          break;
        }
      }
      if (in) mask.set(body);
    }
    return mask;
  }

  const detail::FlatFamily& flat_;
  long long min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

class OracleExact {
 public:
  explicit OracleExact(const Family& f) : f_(f) {
    for (const auto& b : f.bodies)
      for (const auto& p : b.vertices) verts_.push_back(p);
    if (!verts_.empty()) {
      min_x_ = max_x_ = verts_[0].x;
      min_y_ = max_y_ = verts_[0].y;
      for (const auto& p : verts_) {
        min_x_ = std::min(min_x_, p.x);
        max_x_ = std::max(max_x_, p.x);
        min_y_ = std::min(min_y_, p.y);
        max_y_ = std::max(max_y_, p.y);
      }
    }
  }

  std::optional<Bitmask> trial(const TrialWords& t) {
    if (verts_.empty()) return std::nullopt;
    Halfplane h;
    if ((t.w[0] & 1) == 0) {
      const Pt& u = verts_[t.w[1] % verts_.size()];
      const Pt& v = verts_[t.w[2] % verts_.size()];
      if (u == v) return std::nullopt;
      int e = 1 + static_cast<int>(t.w[3] % 40);
      Rat eta = make_rat(1, 1ll << e);
      if ((t.w[3] >> 8) & 1) eta = -eta;
      Rat dx = v.x - u.x, dy = v.y - u.y;
      Pt u2{Rat(u.x - eta * dy), Rat(u.y + eta * dx)};
      Rat ddx = v.x - u2.x, ddy = v.y - u2.y;
      Rat c = ddy * v.x - ddx * v.y;
      if (t.w[4] & 1) {
        int tt = static_cast<int>((t.w[4] >> 1) % 40);
        Rat shift = make_rat(1, 1ll << tt) * (rat_abs(c) + rat_abs(ddx) + rat_abs(ddy) + 1);
        c += ((t.w[4] >> 50) & 1) ? shift : Rat(-shift);
      }
      h = make_halfplane(ddy, Rat(-ddx), c);
    } else {
      long long a = static_cast<long long>(t.w[1] % ((1u << 20) + 1)) - (1 << 19);
      long long b = static_cast<long long>(t.w[2] % ((1u << 20) + 1)) - (1 << 19);
      if (a == 0 && b == 0) a = 1;
      Rat r = make_rat(static_cast<long long>(t.w[3] % ((1u << 20) + 1)), 1 << 20);
      Rat s = make_rat(static_cast<long long>(t.w[4] % ((1u << 20) + 1)), 1 << 20);
      Pt q{Rat(min_x_ + r * (max_x_ - min_x_)), Rat(min_y_ + s * (max_y_ - min_y_))};
      h = make_halfplane(make_rat(a), make_rat(b), Rat(make_rat(a) * q.x + make_rat(b) * q.y));
    }
    Bitmask mask(f_.size());
    for (const auto& b : f_.bodies)
      if (body_in_halfplane(b, h)) mask.set(b.id);
    return mask;
  }

 private:
  const Family& f_;
  std::vector<Pt> verts_;
  Rat min_x_, max_x_, min_y_, max_y_;
};

}  // namespace

EdgeSet sampled_oracle(const Family& f, long long trials, uint64_t seed) {
  require_planar(f, "sampled_oracle");
  std::mt19937_64 rng(seed);
  std::unordered_set<Bitmask, BitmaskHash> seen;
  auto flat = detail::flatten(f);
  bool fast = flat.small && flat.V > 0;
  if (fast) {
    for (int i = 0; i < flat.V; ++i) {
      fast = fast && (flat.xs[i] < (1ll << 40)) && (flat.xs[i] > -(1ll << 40)) &&
             (flat.ys[i] < (1ll << 40)) && (flat.ys[i] > -(1ll << 40));
    }
  }
  if (fast) {
    OracleFast oracle(flat);
    for (long long t = 0; t < trials; ++t) {
      TrialWords w;
      for (auto& x : w.w) x = rng();
      if (auto mask = oracle.trial(w)) seen.insert(std::move(*mask));
    }
  } else {
    OracleExact oracle(f);
    for (long long t = 0; t < trials; ++t) {
      TrialWords w;
      for (auto& x : w.w) x = rng();
      if (auto mask = oracle.trial(w)) seen.insert(std::move(*mask));
    }
  }
  std::vector<Bitmask> edges(seen.begin(), seen.end());
  return EdgeSet(f.size(), std::move(edges));
}

}  // namespace shatter
