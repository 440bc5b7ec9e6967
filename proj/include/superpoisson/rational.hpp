/*
 * rational.hpp -- exact scalar type used throughout the library.
 *
 * Invariants (maintained by boost::multiprecision::cpp_rational):
 * denominator > 0 and gcd(|numerator|, denominator) == 1.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace superpoisson {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// "3", "-3" or "3/2"; denominator always printed positive.
inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace superpoisson
