#pragma once

// Planted hitting-set instances with known transversal number. Clusters of
// short segments sit on the convex curve (40i, 8i^2); the halfplane
// {y - ((i+j)/5) x <= 4 - 8ij} contains exactly clusters i..j: a cluster k
// inside the box c_k +- 1 has relative height 8(k-i)(k-j) with slack < 2.5,
// so the margin 4 separates cleanly. Singleton halfplanes per cluster force
// tau = #clusters; extra random arcs keep the instance interesting.

#include <random>

#include "shatter/solver.hpp"

namespace shatter::testsupport {

inline Halfplane arc_halfplane(int i, int j) {
  return make_halfplane(make_rat(-(i + j), 5), make_rat(1), make_rat(4 - 8 * i * j));
}

inline HittingInstance planted_instance(int tau, uint64_t seed) {
  std::mt19937_64 g(seed);
  auto below = [&](uint64_t n) { return g() % n; };
  std::vector<ConvexBody> segments;
  for (int i = 0; i < tau; ++i) {
    long long cx = 40 * i, cy = 8ll * i * i;
    int count = 2 + static_cast<int>(below(4));
    for (int s = 0; s < count; ++s) {
      for (int tries = 0;; ++tries) {
        auto coord = [&](long long center) {
          return make_rat(center * 8 + static_cast<long long>(below(17)) - 8, 8);
        };
        Pt a{coord(cx), coord(cy)};
        Pt b{coord(cx), coord(cy)};
        if (std::max(rat_abs(a.x - b.x), rat_abs(a.y - b.y)) >= make_rat(1, 2)) {
          segments.push_back(ConvexBody{static_cast<int>(segments.size()), {a, b}});
          break;
        }
        if (tries > 64) throw std::logic_error("planted segment sampling failed");
      }
    }
  }
  std::vector<Halfplane> halfplanes;
  for (int i = 0; i < tau; ++i) halfplanes.push_back(arc_halfplane(i, i));
  int extras = 2 + static_cast<int>(below(4));
  for (int e = 0; e < extras; ++e) {
    int i = static_cast<int>(below(tau));
    int j = i + static_cast<int>(below(tau - i));
    halfplanes.push_back(arc_halfplane(i, j));
  }
  return make_hitting_instance(make_family(std::move(segments)), std::move(halfplanes));
}

}  // namespace shatter::testsupport
