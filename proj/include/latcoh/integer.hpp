#pragma once

// Arbitrary-precision integer scalar used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

namespace latcoh {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_int(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

// g = u*a + v*b, g = gcd(a,b) >= 0.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& u, Integer& v)
{
    Integer r0 = a, r1 = b;
    Integer s0 = 1, s1 = 0;
    Integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1; r0 = r1; r1 = r2;
        Integer s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Integer t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    u = s0;
    v = t0;
    return r0;
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b)
{
    return a - floor_div(a, b) * b;
}

} // namespace latcoh
