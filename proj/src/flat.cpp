#include "flat.hpp"

namespace shatter::detail {

namespace {

constexpr long long kSmallLimit = (1ll << 62) - 1;

bool fits_small(const Int& v) {
  return mpz_cmpabs_ui(v.get_mpz_t(), 0) == 0 || mpz_sizeinbase(v.get_mpz_t(), 2) <= 61;
}

}  // namespace

FlatFamily flatten(const Family& f) {
  FlatFamily flat;
  flat.family = &f;
  flat.n = f.size();
  flat.body_start.reserve(f.size() + 1);
  flat.body_start.push_back(0);
  for (const auto& b : f.bodies) {
    for (size_t k = 0; k < b.vertices.size(); ++k) flat.body_of.push_back(b.id);
    flat.body_start.push_back(static_cast<int>(flat.body_of.size()));
  }
  flat.V = static_cast<int>(flat.body_of.size());

  Int lx = 1, ly = 1;
  for (const auto& b : f.bodies) {
    for (const auto& p : b.vertices) {
      mpz_lcm(lx.get_mpz_t(), lx.get_mpz_t(), p.x.get_den_mpz_t());
      mpz_lcm(ly.get_mpz_t(), ly.get_mpz_t(), p.y.get_den_mpz_t());
    }
  }
  flat.zxs.reserve(flat.V);
  flat.zys.reserve(flat.V);
  bool small = true;
  for (const auto& b : f.bodies) {
    for (const auto& p : b.vertices) {
      Int sx = p.x.get_num() * (lx / p.x.get_den());
      Int sy = p.y.get_num() * (ly / p.y.get_den());
      small = small && fits_small(sx) && fits_small(sy);
      flat.zxs.push_back(std::move(sx));
      flat.zys.push_back(std::move(sy));
    }
  }
  flat.small = small;
  if (small) {
    flat.xs.resize(flat.V);
    flat.ys.resize(flat.V);
    for (int i = 0; i < flat.V; ++i) {
      flat.xs[i] = flat.zxs[i].get_si();
      flat.ys[i] = flat.zys[i].get_si();
    }
  }
  (void)kSmallLimit;
  return flat;
}

Pt vertex_point(const FlatFamily& f, int idx) {
  int b = f.body_of[idx];
  const ConvexBody& body = f.family->bodies[b];
  int local = idx - f.body_start[b];
  return body.vertices[local];
}

GpIssue find_duplicate(const FlatFamily& f) {
  std::vector<int> order(f.V);
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](int a, int b) {
    if (f.small) {
      if (f.xs[a] != f.xs[b]) return f.xs[a] < f.xs[b];
      if (f.ys[a] != f.ys[b]) return f.ys[a] < f.ys[b];
    } else {
      int c = cmp(f.zxs[a], f.zxs[b]);
      if (c != 0) return c < 0;
      c = cmp(f.zys[a], f.zys[b]);
      if (c != 0) return c < 0;
    }
    return a < b;
  };
  std::sort(order.begin(), order.end(), key_less);
  auto equal_pt = [&](int a, int b) {
    if (f.small) return f.xs[a] == f.xs[b] && f.ys[a] == f.ys[b];
    return f.zxs[a] == f.zxs[b] && f.zys[a] == f.zys[b];
  };
  for (int i = 0; i + 1 < f.V; ++i) {
    if (equal_pt(order[i], order[i + 1])) {
      GpIssue issue;
      issue.kind = GpIssue::Duplicate;
      issue.a = order[i];
      issue.b = order[i + 1];
      return issue;
    }
  }
  return {};
}

namespace {

// canonical direction: reduced by gcd, sign fixed so (dx>0) or (dx==0, dy>0)
struct Dir64 {
  long long dx, dy;
  int idx;
};

GpIssue collinear_small(const FlatFamily& f) {
  std::vector<Dir64> dirs;
  dirs.reserve(f.V);
  for (int a = 0; a < f.V; ++a) {
    dirs.clear();
    for (int i = 0; i < f.V; ++i) {
      if (i == a) continue;
      long long dx = f.xs[i] - f.xs[a];
      long long dy = f.ys[i] - f.ys[a];
      if (dx == 0 && dy == 0) continue;  // duplicate of anchor: not a triple
      long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, i});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir64& l, const Dir64& r) {
      if (l.dx != r.dx) return l.dx < r.dx;
      if (l.dy != r.dy) return l.dy < r.dy;
      return l.idx < r.idx;
    });
    for (size_t i = 0; i + 1 < dirs.size(); ++i) {
      size_t j = i;
      while (j + 1 < dirs.size() && dirs[j + 1].dx == dirs[i].dx && dirs[j + 1].dy == dirs[i].dy)
        ++j;
      // run [i..j] shares a line through the anchor; find two distinct values
      for (size_t p = i; p <= j; ++p) {
        for (size_t q = p + 1; q <= j; ++q) {
          int ip = dirs[p].idx, iq = dirs[q].idx;
          if (f.xs[ip] != f.xs[iq] || f.ys[ip] != f.ys[iq]) {
            GpIssue issue;
            issue.kind = GpIssue::Collinear;
            issue.a = a;
            issue.b = ip;
            issue.c = iq;
            return issue;
          }
        }
      }
      i = j;
    }
  }
  return {};
}

struct DirBig {
  Int dx, dy;
  int idx;
};

GpIssue collinear_big(const FlatFamily& f) {
  std::vector<DirBig> dirs;
  for (int a = 0; a < f.V; ++a) {
    dirs.clear();
    for (int i = 0; i < f.V; ++i) {
      if (i == a) continue;
      Int dx = f.zxs[i] - f.zxs[a];
      Int dy = f.zys[i] - f.zys[a];
      if (dx == 0 && dy == 0) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({std::move(dx), std::move(dy), i});
    }
    std::sort(dirs.begin(), dirs.end(), [](const DirBig& l, const DirBig& r) {
      int c = cmp(l.dx, r.dx);
      if (c != 0) return c < 0;
      c = cmp(l.dy, r.dy);
      if (c != 0) return c < 0;
      return l.idx < r.idx;
    });
    for (size_t i = 0; i + 1 < dirs.size(); ++i) {
      size_t j = i;
      while (j + 1 < dirs.size() && dirs[j + 1].dx == dirs[i].dx && dirs[j + 1].dy == dirs[i].dy)
        ++j;
      for (size_t p = i; p <= j; ++p) {
        for (size_t q = p + 1; q <= j; ++q) {
          int ip = dirs[p].idx, iq = dirs[q].idx;
          if (f.zxs[ip] != f.zxs[iq] || f.zys[ip] != f.zys[iq]) {
            GpIssue issue;
            issue.kind = GpIssue::Collinear;
            issue.a = a;
            issue.b = ip;
            issue.c = iq;
            return issue;
          }
        }
      }
      i = j;
    }
  }
  return {};
}

}  // namespace

GpIssue find_collinear_distinct(const FlatFamily& f) {
  return f.small ? collinear_small(f) : collinear_big(f);
}

}  // namespace shatter::detail
