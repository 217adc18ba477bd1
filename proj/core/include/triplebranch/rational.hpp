#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

// Exact arithmetic base layer. Slope and density comparisons are rational
// equalities, so nothing in this library ever touches floating point.

namespace tb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fractional part <q> in [0,1); q - frac(q) is an integer.
inline Rational frac(const Rational& q) {
    BigInt n = numerator(q);
    const BigInt d = denominator(q);  // always > 0 in normalized form
    BigInt r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

inline long long gcdll(long long a, long long b) {
    return std::gcd(a, b);
}

// lcm with a guard; the moduli in this project stay small and anything
// larger signals a wrong call.
inline long long lcm_checked(long long a, long long b, long long limit = 50'000'000LL) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("lcm_checked: nonpositive input");
    const long long g = std::gcd(a, b);
    const long long q = a / g;
    if (q > limit / b) throw std::overflow_error("lcm_checked: modulus blowup");
    return q * b;
}

}  // namespace tb
