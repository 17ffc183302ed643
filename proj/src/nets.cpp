#include "shatter/nets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "flat.hpp"

namespace shatter {

WeightVector uniform_weights(int n) {
  WeightVector w;
  w.weights.assign(n, Rat(1));
  w.total = Rat(static_cast<long>(n));
  return w;
}

WeightVector make_weights(std::vector<Rat> weights) {
  WeightVector w;
  w.total = 0;
  for (const auto& x : weights) {
    if (x < 0) throw ValidationError("weights must be nonnegative");
    w.total += x;
  }
  w.weights = std::move(weights);
  return w;
}

namespace {

void validate_eps(const Rat& eps) {
  if (!(eps > 0 && eps < 1)) throw InvalidEps("eps must lie strictly between 0 and 1");
}

void validate_weights(const Family& f, const WeightVector& w) {
  if (static_cast<int>(w.weights.size()) != f.size())
    throw ValidationError("weight vector size must match the family");
  if (!(w.total > 0)) throw ZeroTotalWeight("total weight must be positive");
}

// Weights cleared to a common denominator; int64 fast path when everything
// (including the heavy-edge threshold products) fits in int128 comfortably.
struct ScaledWeights {
  bool small = true;
  std::vector<long long> wi;
  std::vector<Int> wz;
  Int total;
};

ScaledWeights scale_weights(const WeightVector& w) {
  ScaledWeights s;
  Int den = 1;
  for (const auto& x : w.weights) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  s.total = 0;
  for (const auto& x : w.weights) {
    Int v = x.get_num() * (den / x.get_den());
    s.total += v;
    s.wz.push_back(std::move(v));
  }
  for (const auto& v : s.wz) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 50) s.small = false;
  }
  if (mpz_sizeinbase(s.total.get_mpz_t(), 2) > 50) s.small = false;
  if (s.small) {
    for (const auto& v : s.wz) s.wi.push_back(v.get_si());
  }
  return s;
}

}  // namespace

std::optional<Bitmask> verify_epsilon_net(const Family& f, const Rat& eps, const WeightVector& w,
                                          const Bitmask& net) {
  if (f.ambient != Ambient::Planar)
    throw std::invalid_argument("verify_epsilon_net requires a planar family");
  validate_eps(eps);
  validate_weights(f, w);
  const int n = f.size();
  if (n == 0) return std::nullopt;
  // The full family is always realized and always heavy.
  if (net.none()) return Bitmask::full(n);

  GpReport rep = check_collinear_free(f);
  if (!rep.ok) throw GeneralPositionViolation(std::move(rep));
  auto flat = detail::flatten(f);

  ScaledWeights sw = scale_weights(w);
  std::optional<Bitmask> violating;
  if (sw.small && mpz_sizeinbase(eps.get_num_mpz_t(), 2) <= 50 &&
      mpz_sizeinbase(eps.get_den_mpz_t(), 2) <= 50) {
    const long long eps_num = Int(eps.get_num()).get_si();
    const long long eps_den = Int(eps.get_den()).get_si();
    const __int128 rhs = static_cast<__int128>(eps_num) * sw.total.get_si();
    detail::scan_candidates(flat, [&](const Bitmask& mask, int, int) {
      long long sum = 0;
      bool hit = false;
      for_each_set_bit(mask, [&](int b) {
        sum += sw.wi[b];
        hit = hit || net.test(b);
      });
      if (!hit && static_cast<__int128>(sum) * eps_den >= rhs) {
        violating = mask;
        return false;
      }
      return true;
    });
  } else {
    const Rat threshold = eps * w.total;
    detail::scan_candidates(flat, [&](const Bitmask& mask, int, int) {
      Rat sum(0);
      bool hit = false;
      for_each_set_bit(mask, [&](int b) {
        sum += w.weights[b];
        hit = hit || net.test(b);
      });
      if (!hit && sum >= threshold) {
        violating = mask;
        return false;
      }
      return true;
    });
  }
  return violating;
}

namespace {

int draw_weighted(const std::vector<Rat>& cumulative, const Rat& total, uint64_t r) {
  // x = total * r / 2^64, then the first index with cumulative > x
  Rat x = total * Rat(to_uint(r)) / Rat(Int(1) << 64);
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
  if (it == cumulative.end()) return static_cast<int>(cumulative.size()) - 1;
  return static_cast<int>(it - cumulative.begin());
}

}  // namespace

long long epsilon_net_sample_size(const Rat& eps, int d) {
  long double q = static_cast<long double>(8.0 * d) / rat_to_double(eps);
  long double x = 16.0L / static_cast<long double>(rat_to_double(eps));
  long long m = static_cast<long long>(std::ceil(q * std::log(x)));
  return std::max<long long>(1, m);
}

NetResult epsilon_net(const Family& f, const Rat& eps, const WeightVector& w, int d,
                      uint64_t seed) {
  validate_eps(eps);
  validate_weights(f, w);
  if (d < 1) throw std::invalid_argument("epsilon_net requires d >= 1");
  const long long m = epsilon_net_sample_size(eps, d);
  std::vector<Rat> cumulative;
  cumulative.reserve(w.weights.size());
  Rat acc(0);
  for (const auto& x : w.weights) {
    acc += x;
    cumulative.push_back(acc);
  }
  std::mt19937_64 rng(seed);
  NetResult result;
  result.sample_size = m;
  result.eps = eps;
  result.d = d;
  for (int attempt = 1; attempt <= 4096; ++attempt) {
    Bitmask net(f.size());
    for (long long i = 0; i < m; ++i) net.set(draw_weighted(cumulative, w.total, rng()));
    if (!verify_epsilon_net(f, eps, w, net)) {
      result.net = std::move(net);
      result.attempts = attempt;
      return result;
    }
  }
  throw std::logic_error("epsilon_net did not find a valid net within the retry bound");
}

Rat max_discrepancy(const Family& f, const Bitmask& sample) {
  if (f.ambient != Ambient::Planar)
    throw std::invalid_argument("max_discrepancy requires a planar family");
  const int n = f.size();
  if (n == 0) throw EmptyFamily("max_discrepancy requires a nonempty family");
  const int p = sample.count();
  if (p == 0) throw EmptySample("max_discrepancy requires a nonempty sample");

  GpReport rep = check_collinear_free(f);
  if (!rep.ok) throw GeneralPositionViolation(std::move(rep));
  auto flat = detail::flatten(f);

  // |e|/n - |e & P|/p has numerator |e|*p - |e & P|*n over the common
  // denominator n*p; the empty and full subsets both give zero.
  long long best = 0;
  detail::scan_candidates(flat, [&](const Bitmask& mask, int, int) {
    long long a = mask.count();
    long long b = mask.count_and(sample);
    long long num = a * p - b * n;
    if (num < 0) num = -num;
    if (num > best) best = num;
    return true;
  });
  Rat r(to_int(best), to_int(static_cast<long long>(n) * p));
  r.canonicalize();
  return r;
}

long long epsilon_approx_sample_size(const Rat& eps, long long n) {
  Rat need = Rat(4) / (eps * eps);
  Int c = rat_ceil(need);
  if (c > to_int(n)) return n;
  return c.get_si();
}

ApproxResult epsilon_approximation(const Family& f, const Rat& eps, uint64_t seed) {
  validate_eps(eps);
  const int n = f.size();
  if (n < 1) throw EmptyFamily("epsilon_approximation requires a nonempty family");
  const long long m = epsilon_approx_sample_size(eps, n);
  std::mt19937_64 rng(seed);
  std::vector<int> idx(n);
  for (int attempt = 1; attempt <= 4096; ++attempt) {
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < m; ++i) {
      int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
      std::swap(idx[i], idx[j]);
    }
    Bitmask sample(n);
    for (int i = 0; i < m; ++i) sample.set(idx[i]);
    Rat disc = max_discrepancy(f, sample);
    if (disc < eps) {
      ApproxResult r;
      r.sample = std::move(sample);
      r.m = m;
      r.discrepancy = std::move(disc);
      r.attempts = attempt;
      return r;
    }
  }
  throw std::logic_error("epsilon_approximation did not converge within the retry bound");
}

}  // namespace shatter
