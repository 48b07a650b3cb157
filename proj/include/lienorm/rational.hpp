#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lienorm {

/// Exact rational number. GMP keeps numerator/denominator reduced with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Bit size of numerator plus denominator; used to prefer small pivots.
std::size_t height(const Rational& q);

/// Strict weak order on rationals by (height, value).
bool canonical_less(const Rational& a, const Rational& b);

}  // namespace lienorm
