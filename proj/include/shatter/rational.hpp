#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace shatter {

// All plane coordinates and halfplane coefficients are exact arbitrary-precision
// rationals. No floating point enters any predicate.
using Rat = mpq_class;
using Int = mpz_class;

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Int to_uint(unsigned long long v) { return Int(static_cast<unsigned long>(v)); }

/// Canonical rational from an integer pair; reduces and fixes the sign of the
/// denominator.
Rat make_rat(long long num, long long den = 1);

/// Parses "p/q" or "p" with an optional leading sign. Rejects everything else,
/// including zero denominators.
std::optional<Rat> try_parse_rat(std::string_view text);

/// As try_parse_rat but throws SyntaxError.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p/q" when the denominator is not 1, else "p".
std::string rat_to_string(const Rat& r);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
Rat rat_abs(const Rat& r);
double rat_to_double(const Rat& r);

/// Exact decimal rendering with `places` fraction digits, rounding half away
/// from zero. Used for SVG coordinates so output is byte-deterministic.
std::string rat_to_fixed(const Rat& r, int places);

}  // namespace shatter
