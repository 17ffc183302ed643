#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shatter {

/// Subset of a family's bodies, body i = bit i. Width is fixed at construction.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitmask full(int n) {
    Bitmask m(n);
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }

  /// Parses the text form: length-n binary string, body 0 = least significant
  /// (rightmost) character.
  static Bitmask from_binary_string(const std::string& s);

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i, bool v = true) {
    if (v)
      w_[i >> 6] |= (uint64_t{1} << (i & 63));
    else
      w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  void clear_all() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }

  int count_and(const Bitmask& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }

  bool intersects(const Bitmask& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitmask& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitmask operator&(const Bitmask& o) const {
    Bitmask r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  bool none() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  bool all() const { return count() == n_; }

  bool operator==(const Bitmask& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitmask& o) const { return !(*this == o); }

  /// Numeric order (mask value as an n-bit integer).
  bool operator<(const Bitmask& o) const {
    for (size_t i = w_.size(); i-- > 0;) {
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    }
    return false;
  }

  std::string to_binary_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (test(i)) s[n_ - 1 - i] = '1';
    return s;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h ^ static_cast<uint64_t>(n_);
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitmaskHash {
  size_t operator()(const Bitmask& m) const { return static_cast<size_t>(m.hash()); }
};

template <class Fn>
void for_each_set_bit(const Bitmask& m, Fn&& fn) {
  const auto& words = m.words();
  for (size_t wi = 0; wi < words.size(); ++wi) {
    uint64_t w = words[wi];
    while (w) {
      int bit = __builtin_ctzll(w);
      fn(static_cast<int>(wi * 64 + bit));
      w &= w - 1;
    }
  }
}

}  // namespace shatter
