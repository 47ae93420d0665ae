#ifndef NETIDENT_RATIONAL_HPP
#define NETIDENT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace netident {

// Exact rational number. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);

// Accepts "p", "p/q" and "-p/q"; result is canonicalized.
// Throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

} // namespace netident

#endif
