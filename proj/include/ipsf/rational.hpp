#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ipsf {

// Exact rational scalar used for the refinement mask and the Galerkin
// coefficient tables. Conversion to double is correctly rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

// 2^e as an exact rational, e may be negative.
inline Rational pow2_rational(int e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

// "num/den" (or "num" when integral), canonical lowest terms.
std::string format_rational(const Rational& r);

// Inverse of format_rational. Throws ValidationError on malformed input.
Rational parse_rational(const std::string& text);

} // namespace ipsf
