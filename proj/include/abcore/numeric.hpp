#pragma once

#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "abcore/errors.hpp"

namespace abcore {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline big_int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    big_int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline rational make_rational(const big_int& num, const big_int& den = 1) {
    return rational(num, den);
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline std::string to_string(const big_int& z) { return z.str(); }

inline bool is_integral(const rational& q) { return boost::multiprecision::denominator(q) == 1; }

inline void require_coprime(long long a, long long b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1) throw non_coprime(a, b);
}

}  // namespace abcore
