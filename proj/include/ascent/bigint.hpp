#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ascent {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

inline BigInt pow3(long long e) {
    if (e < 0) throw std::invalid_argument("pow3: negative exponent");
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= 3;
    return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace ascent
