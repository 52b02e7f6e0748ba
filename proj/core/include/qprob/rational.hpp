#ifndef QPROB_RATIONAL_HPP
#define QPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qprob {

// Exact rational value. Everything in this library is tolerance-zero, so
// there is no floating point anywhere; GMP keeps values in lowest terms
// with a positive denominator.
using Rational = mpq_class;

// Parses "a/b" or "a" (optional leading '-'). Throws Error on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest terms; integers print without the "/1".
std::string format_rational(const Rational& value);

}  // namespace qprob

#endif  // QPROB_RATIONAL_HPP
