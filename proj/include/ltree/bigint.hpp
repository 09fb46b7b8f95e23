#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ltree {

// Arbitrary-precision signed integer. Witness chains reach numerators like
// (3^k - 1)/2 for k up to the configured chain depth, which overflows any
// fixed-width type long before k = 64.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// base^k for k >= 0.
inline BigInt big_pow(const BigInt& base, unsigned k) {
    return boost::multiprecision::pow(base, k);
}

/// floor(n / d), d > 0.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;          // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// ceil(n / d), d > 0.
inline BigInt ceil_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

/// floor(sqrt(n)), n >= 0.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

/// floor(c * sqrt(2)) for integer c.
inline BigInt floor_sqrt2_multiple(const BigInt& c) {
    if (c == 0) return 0;
    if (c > 0) return isqrt(2 * c * c);
    // c < 0: floor(c*sqrt2) = -ceil(|c|*sqrt2); |c|*sqrt2 is never an integer.
    BigInt a = big_abs(c);
    return -(isqrt(2 * a * a) + 1);
}

/// ceil(c * sqrt(2)) for integer c.
inline BigInt ceil_sqrt2_multiple(const BigInt& c) {
    if (c == 0) return 0;
    return floor_sqrt2_multiple(c) + 1;  // c*sqrt2 irrational for c != 0
}

}  // namespace ltree
