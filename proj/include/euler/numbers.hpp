#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace euler {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; every intermediate division is exact.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// True when b fits into long long and b <= v.
inline bool fits_leq(const BigInt& b, long long v) {
    return b <= BigInt(v);
}

inline long long to_ll(const BigInt& b) {
    if (b > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("value does not fit in long long: " + b.str());
    return b.convert_to<long long>();
}

} // namespace euler
