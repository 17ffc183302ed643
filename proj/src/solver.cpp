#include "shatter/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace shatter {

HittingInstance make_hitting_instance(Family segments, std::vector<Halfplane> halfplanes) {
  if (segments.ambient != Ambient::Planar)
    throw ValidationError("hitting instance requires a planar family");
  for (const auto& b : segments.bodies)
    if (b.kind() != BodyKind::Segment)
      throw ValidationError("hitting instance bodies must all be segments");
  HittingInstance inst;
  inst.ranges.reserve(halfplanes.size());
  for (size_t h = 0; h < halfplanes.size(); ++h) {
    Bitmask range(segments.size());
    for (const auto& b : segments.bodies)
      if (body_in_halfplane(b, halfplanes[h])) range.set(b.id);
    if (range.none())
      throw InfeasibleInstance("halfplane " + std::to_string(h) + " contains no segment");
    inst.ranges.push_back(std::move(range));
  }
  inst.segments = std::move(segments);
  inst.halfplanes = std::move(halfplanes);
  return inst;
}

std::optional<int> verify_hitting_set(const HittingInstance& inst, const Bitmask& t) {
  for (size_t h = 0; h < inst.ranges.size(); ++h)
    if (!inst.ranges[h].intersects(t)) return static_cast<int>(h);
  return std::nullopt;
}

namespace {

// Net sample size per k: floor(5k * log2(2 + 2k)) draws. Small enough that
// the returned set stays within the acceptance size bound at every k the
// doubling schedule can reach, large enough that resampling is rare.
long long net_sample_size(int k) {
  double v = 5.0 * k * std::log2(2.0 + 2.0 * k);
  return std::max<long long>(4, static_cast<long long>(std::floor(v)));
}

long long round_budget(int k, int n) {
  double v = 4.0 * k * std::log2(std::max(2.0, static_cast<double>(n) / k));
  return static_cast<long long>(std::ceil(v));
}

// Uniform draw from [0, total) over multi-word weights.
Int draw_mod(std::mt19937_64& rng, const Int& total) {
  size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2);
  size_t words = bits / 64 + 2;
  Int acc = 0;
  for (size_t i = 0; i < words; ++i) {
    acc <<= 64;
    acc += to_uint(rng());
  }
  return acc % total;
}

int weighted_index(const std::vector<Int>& cumulative, const Int& x) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
  if (it == cumulative.end()) return static_cast<int>(cumulative.size()) - 1;
  return static_cast<int>(it - cumulative.begin());
}

}  // namespace

SolverTrace bg_hitting_set(const HittingInstance& inst, uint64_t seed) {
  const int n = inst.segments.size();
  const int m_ranges = static_cast<int>(inst.ranges.size());
  std::mt19937_64 rng(seed);
  SolverTrace trace;

  int k_limit = 1;
  while (k_limit < n) k_limit <<= 1;

  for (int k = 1;; k <<= 1) {
    if (k > std::max(1, k_limit))
      throw std::logic_error("bg_hitting_set: k exceeded its termination bound");
    std::vector<Int> weight(n, Int(1));
    Int total = n;
    const long long budget = round_budget(k, n);
    const long long m_net = std::min<long long>(net_sample_size(k), n);
    int rounds = 0;
    bool solved = false;
    for (long long round = 0; round < budget; ++round) {
      ++rounds;
      std::vector<Int> cumulative(n);
      Int acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += weight[i];
        cumulative[i] = acc;
      }
      // Las Vegas weighted 1/(2k)-net over the finite range list: every range
      // of weight >= total/(2k) must be hit; resample until that holds.
      Bitmask net(n);
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 1 << 20) throw std::logic_error("bg_hitting_set: net resampling diverged");
        net.clear_all();
        for (long long i = 0; i < m_net; ++i)
          net.set(weighted_index(cumulative, draw_mod(rng, total)));
        bool valid = true;
        for (int h = 0; h < m_ranges && valid; ++h) {
          if (inst.ranges[h].intersects(net)) continue;
          Int range_weight = 0;
          for_each_set_bit(inst.ranges[h], [&](int b) { range_weight += weight[b]; });
          valid = range_weight * (2 * k) < total;
        }
        if (valid) break;
      }
      auto unhit = verify_hitting_set(inst, net);
      if (!unhit) {
        trace.final_k = k;
        trace.rounds_per_k.push_back(rounds);
        trace.solution = std::move(net);
        solved = true;
        break;
      }
      // The unhit range escaped a valid 1/(2k)-net, so it must be light.
      Int range_weight = 0;
      for_each_set_bit(inst.ranges[*unhit], [&](int b) { range_weight += weight[b]; });
      if (!(range_weight * (2 * k) < total))
        throw std::logic_error("bg_hitting_set: doubled range was not light");
      for_each_set_bit(inst.ranges[*unhit], [&](int b) {
        total += weight[b];
        weight[b] *= 2;
      });
      ++trace.doublings;
    }
    if (solved) break;
    trace.rounds_per_k.push_back(rounds);
  }
  if (verify_hitting_set(inst, trace.solution))
    throw std::logic_error("bg_hitting_set: returned set failed verification");
  return trace;
}

std::optional<ExactHit> exact_min_hitting_set(const HittingInstance& inst, int cap) {
  if (cap < 0) throw std::invalid_argument("exact_min_hitting_set requires cap >= 0");
  const int n = inst.segments.size();
  cap = std::min(cap, n);
  for (int size = 0; size <= cap; ++size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      Bitmask t(n);
      for (int i : comb) t.set(i);
      if (!verify_hitting_set(inst, t)) return ExactHit{std::move(t), size};
      // next combination in lexicographic order
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (size == 0 && n == 0) break;
  }
  return std::nullopt;
}

RangeCountResult range_count(const Family& f, const Halfplane& h) {
  if (f.size() < 1) throw EmptyFamily("range_count requires a nonempty family");
  long long count = 0;
  for (const auto& b : f.bodies)
    if (body_in_halfplane(b, h)) ++count;
  Rat ratio(to_int(count), to_int(f.size()));
  ratio.canonicalize();
  return RangeCountResult{count, std::move(ratio)};
}

}  // namespace shatter
