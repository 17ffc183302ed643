#pragma once

#include <cstdint>
#include <optional>

#include "shatter/hypergraph.hpp"

namespace shatter {

struct WeightVector {
  std::vector<Rat> weights;
  Rat total;
};

WeightVector uniform_weights(int n);
WeightVector make_weights(std::vector<Rat> weights);  // validates nonnegativity

struct NetResult {
  Bitmask net;
  long long sample_size = 0;  // i.i.d. draws before dedup
  int attempts = 0;
  Rat eps;
  int d = 0;
};

/// Las Vegas epsilon-net: draw ceil((8d/eps) * ln(16/eps)) bodies i.i.d.
/// proportional to the weights, deduplicate, verify exactly against the
/// enumerated edge set, retry with fresh randomness until valid. Every result
/// returned has passed verify_epsilon_net.
NetResult epsilon_net(const Family& f, const Rat& eps, const WeightVector& w, int d,
                      uint64_t seed);

/// Exact check: nullopt when every realized subset of weight >= eps * total
/// intersects `net`, otherwise one violating edge.
std::optional<Bitmask> verify_epsilon_net(const Family& f, const Rat& eps, const WeightVector& w,
                                          const Bitmask& net);

struct ApproxResult {
  Bitmask sample;
  long long m = 0;
  Rat discrepancy;
  int attempts = 0;
};

/// Las Vegas epsilon-approximation: uniform sample of min(n, ceil(4/eps^2))
/// distinct bodies, retried until the exact maximum discrepancy over all
/// realized subsets is below eps.
ApproxResult epsilon_approximation(const Family& f, const Rat& eps, uint64_t seed);

/// max over realized subsets e of | |e|/n - |e & sample|/|sample| |, exact.
Rat max_discrepancy(const Family& f, const Bitmask& sample);

long long epsilon_net_sample_size(const Rat& eps, int d);
long long epsilon_approx_sample_size(const Rat& eps, long long n);

}  // namespace shatter
