#pragma once

#include "ascent/bigint.hpp"

#include <stdexcept>
#include <vector>

namespace ascent {

/// Fibonacci with F_0 = 0, F_1 = 1.
inline BigInt fibonacci(long long n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (long long i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

/// Catalan numbers, C_0 = 1.
inline BigInt catalan(long long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    BigInt c = 1; // C_0
    for (long long i = 0; i < n; ++i) {
        c *= 2 * (2 * i + 1);
        c /= i + 2; // exact
    }
    return c;
}

/// Motzkin numbers, M_0 = 1, via M_n = M_{n-1} + sum M_i * M_{n-2-i}.
inline BigInt motzkin(long long n) {
    if (n < 0) throw std::invalid_argument("motzkin: negative index");
    std::vector<BigInt> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (long long k = 1; k <= n; ++k) {
        BigInt v = m[static_cast<std::size_t>(k - 1)];
        for (long long i = 0; i <= k - 2; ++i)
            v += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 2 - i)];
        m[static_cast<std::size_t>(k)] = v;
    }
    return m[static_cast<std::size_t>(n)];
}

} // namespace ascent
