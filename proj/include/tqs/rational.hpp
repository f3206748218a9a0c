#ifndef TQS_RATIONAL_HPP
#define TQS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace tqs {

// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Wire form "p/q"; integers are written as "p/1".
std::string to_wire(const Rational& q);

// Accepts "p/q", "p", with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::size_t hash_value(const Rational& q) noexcept;

} // namespace tqs

#endif
