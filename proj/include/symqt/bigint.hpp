#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symqt {

// Arbitrary-precision integers and rationals; no floating point anywhere
// in the math path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    int n = e > 0 ? e : -e;
    Rat r(1);
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Int int_factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace symqt
