#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sheaf1d {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p/q" or "p" with optional sign. Throws MalformedInput.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when integral.
std::string format_rational(const Rational& r);

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

Rational floor_of(const Rational& r);

}  // namespace sheaf1d
