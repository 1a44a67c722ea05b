#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "cwilf/errors.hpp"

namespace cwilf {

/// Exact integer used for every coefficient and count in the library.
/// [n]_q! coefficients and n!-scaled series coefficients overflow 64 bits
/// around n = 20, so everything is arbitrary precision from the start.
/// Expression templates are off so that Int behaves like a plain value
/// type in containers and structured bindings.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int int_pow(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int factorial(int n) {
    if (n < 0) throw invalid_input("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Plain binomial coefficient; 0 when out of range (including n < 0),
/// matching the convention used by the quoted recursions.
inline Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// C_k = binom(2k, k) / (k+1)
inline Int catalan(int k) {
    if (k < 0) throw invalid_input("catalan: negative index");
    Int b = binomial(2 * k, k);
    return b / (k + 1);
}

/// Double falling factorial: (x)↓↓_0 = 1, (x)↓↓_k = x(x-2)...(x-2k+2).
inline Int double_falling(long long x, int k) {
    if (k < 0) throw invalid_input("double_falling: negative depth");
    Int r = 1;
    for (int t = 0; t < k; ++t) r *= Int(x - 2 * t);
    return r;
}

} // namespace cwilf
