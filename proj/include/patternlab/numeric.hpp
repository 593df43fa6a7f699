#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace patternlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the conventions used throughout:
// C(a, 0) = 1 for any integer a, C(a, k) = 0 for k < 0 or (a >= 0 and k > a).
inline Int binomial(long long a, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (a < 0) return 0;  // only reached with k >= 1; C(a,k)=0 for 0 <= a < k
    if (k > a) return 0;
    if (k > a - k) k = a - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= a - k + i;
        r /= i;
    }
    return r;
}

inline Int int_pow(const Int& base, unsigned long long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace patternlab
