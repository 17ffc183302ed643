#include "shatter/rational.hpp"

#include <cctype>

#include "shatter/errors.hpp"

namespace shatter {

Rat make_rat(long long num, long long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r{Int(static_cast<long>(num)), Int(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

std::optional<Rat> try_parse_rat(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_begin) return std::nullopt;
  std::string num(text.substr(0, i));
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den.assign(text.substr(den_begin));
  }
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  auto r = try_parse_rat(text);
  if (!r) throw SyntaxError("invalid rational literal: \"" + text + "\"");
  return *r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double rat_to_double(const Rat& r) { return r.get_d(); }

std::string rat_to_fixed(const Rat& r, int places) {
  Int pow10 = 1;
  for (int i = 0; i < places; ++i) pow10 *= 10;
  // round(r * 10^places) half away from zero
  Rat scaled = r * Rat(pow10);
  Int twice_num = scaled.get_num() * 2;
  Int den = scaled.get_den();
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), twice_num.get_mpz_t(), (Int(den * 2)).get_mpz_t());
  Int rounded = q;
  Int rem_abs = abs(rem);
  if (rem_abs * 1 >= den) rounded += (twice_num < 0 ? -1 : 1);
  bool neg = rounded < 0;
  Int mag = abs(rounded);
  Int ip = mag / pow10;
  Int fp = mag % pow10;
  std::string frac = fp.get_str();
  while (static_cast<int>(frac.size()) < places) frac.insert(frac.begin(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (places > 0) out += "." + frac;
  return out;
}

}  // namespace shatter
