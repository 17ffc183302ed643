#pragma once

// Internal: integer-scaled view of a family plus the candidate sweep that
// underlies subset enumeration. Coordinates are cleared of denominators per
// axis (positive scaling preserves every orientation sign), then classified
// with int128 cross products when they fit in 62 bits, falling back to
// arbitrary-precision integers otherwise.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "shatter/bitmask.hpp"
#include "shatter/geom.hpp"

namespace shatter::detail {

struct FlatFamily {
  int n = 0;  // bodies
  int V = 0;  // total vertices
  std::vector<int> body_of;     // per vertex
  std::vector<int> body_start;  // size n+1
  bool small = true;
  std::vector<long long> xs, ys;  // small path (|coord| < 2^62)
  std::vector<Int> zxs, zys;      // big path
  const Family* family = nullptr;
};

FlatFamily flatten(const Family& f);

struct GpIssue {
  enum Kind { None, Duplicate, Collinear } kind = None;
  int a = -1, b = -1, c = -1;  // vertex indices
};

/// First pair of vertices with equal coordinates, by (value, index) order.
GpIssue find_duplicate(const FlatFamily& f);

/// First triple of pairwise-distinct vertex values that are collinear
/// (anchor index ascending, then direction order).
GpIssue find_collinear_distinct(const FlatFamily& f);

Pt vertex_point(const FlatFamily& f, int idx);

inline int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Candidate sweep. For every ordered pair (u, v) of vertices of distinct
// bodies with distinct values, classifies each body against the directed line
// u->v: a body belongs to the candidate subset iff every vertex is strictly
// left or coincides with v. Emits (mask, tail index, head index); the mask
// buffer is reused between calls. Emit returns false to stop the sweep.
template <class Emit>
void scan_candidates_small(const FlatFamily& f, Emit&& emit) {
  const int V = f.V, n = f.n;
  Bitmask mask(n);
  for (int j = 0; j < V; ++j) {
    const long long vx = f.xs[j], vy = f.ys[j];
    const int bj = f.body_of[j];
    for (int i = 0; i < V; ++i) {
      if (f.body_of[i] == bj) continue;
      const long long ux = f.xs[i], uy = f.ys[i];
      const long long dx = vx - ux, dy = vy - uy;
      if (dx == 0 && dy == 0) continue;  // shared point, no line
      const int bi = f.body_of[i];
      mask.clear_all();
      for (int b = 0; b < n; ++b) {
        if (b == bi) continue;  // tail vertex pins its body outside
        bool in = true;
        for (int k = f.body_start[b]; k < f.body_start[b + 1]; ++k) {
          __int128 cr = static_cast<__int128>(dx) * (f.ys[k] - uy) -
                        static_cast<__int128>(dy) * (f.xs[k] - ux);
          if (cr > 0) continue;
          if (f.xs[k] == vx && f.ys[k] == vy) continue;  // head contact allowed
          in = false;
          break;
        }
        if (in) mask.set(b);
      }
      if (!emit(static_cast<const Bitmask&>(mask), i, j)) return;
    }
  }
}

template <class Emit>
void scan_candidates_big(const FlatFamily& f, Emit&& emit) {
  const int V = f.V, n = f.n;
  Bitmask mask(n);
  Int dx, dy, t1, t2;
  for (int j = 0; j < V; ++j) {
    const Int& vx = f.zxs[j];
    const Int& vy = f.zys[j];
    const int bj = f.body_of[j];
    for (int i = 0; i < V; ++i) {
      if (f.body_of[i] == bj) continue;
      const Int& ux = f.zxs[i];
      const Int& uy = f.zys[i];
      dx = vx - ux;
      dy = vy - uy;
      if (dx == 0 && dy == 0) continue;
      const int bi = f.body_of[i];
      mask.clear_all();
      for (int b = 0; b < n; ++b) {
        if (b == bi) continue;
        bool in = true;
        for (int k = f.body_start[b]; k < f.body_start[b + 1]; ++k) {
          t1 = dx * (f.zys[k] - uy);
          t2 = dy * (f.zxs[k] - ux);
          if (cmp(t1, t2) > 0) continue;
          if (f.zxs[k] == vx && f.zys[k] == vy) continue;
          in = false;
          break;
        }
        if (in) mask.set(b);
      }
      if (!emit(static_cast<const Bitmask&>(mask), i, j)) return;
    }
  }
}

template <class Emit>
void scan_candidates(const FlatFamily& f, Emit&& emit) {
  if (f.small)
    scan_candidates_small(f, emit);
  else
    scan_candidates_big(f, emit);
}

}  // namespace shatter::detail
