#pragma once

#include "ascent/bigint.hpp"
#include "ascent/pattern.hpp"
#include "ascent/polynomial.hpp"
#include "ascent/sequences.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascent {

/// Number of Dyck words of semilength n with no DDUU factor, by a dynamic
/// program over (height, last-three-steps).  The step code keeps the last
/// three steps as bits (U=1), seeded with 111 so short histories never fake a
/// DDU suffix; appending U is barred exactly when the code reads 001.
inline BigInt dduu_avoiding_dyck_count(int semilength) {
    if (semilength < 0) throw std::invalid_argument("dduu_avoiding_dyck_count: negative n");
    const int steps = 2 * semilength;
    // state index = height * 8 + code
    std::vector<BigInt> cur(static_cast<std::size_t>(semilength + 1) * 8);
    std::vector<BigInt> next(cur.size());
    cur[0 * 8 + 7] = 1;
    for (int s = 0; s < steps; ++s) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (int h = 0; h <= semilength; ++h) {
            for (int code = 0; code < 8; ++code) {
                const BigInt& v = cur[static_cast<std::size_t>(h) * 8 + code];
                if (v == 0) continue;
                if (h < semilength && code != 0b001) { // up
                    const int nc = ((code << 1) | 1) & 7;
                    next[static_cast<std::size_t>(h + 1) * 8 + nc] += v;
                }
                if (h > 0) { // down
                    const int nc = (code << 1) & 7;
                    next[static_cast<std::size_t>(h - 1) * 8 + nc] += v;
                }
            }
        }
        std::swap(cur, next);
    }
    BigInt total = 0;
    for (int code = 0; code < 8; ++code) total += cur[0 * 8 + code];
    return total;
}

/// Checks (2x^2 f - (1-x)^2)^2 = 1 - 4x + 2x^2 + x^4 through the given order,
/// where f is the series whose coefficients are supplied (constant term
/// included).  This is the squared form of the algebraic generating function
/// for DDUU-avoiding Dyck words.
inline bool algebraic_gf_identity_holds(const std::vector<BigInt>& series, int n_max) {
    if (n_max < 2) throw std::invalid_argument("algebraic_gf_identity_holds: order too small");
    if (static_cast<int>(series.size()) < n_max + 1)
        throw std::invalid_argument("algebraic_gf_identity_holds: series too short");
    std::vector<BigInt> f(series.begin(), series.begin() + n_max + 1);
    IntPolynomial fp{std::vector<BigInt>(f)};
    IntPolynomial two_x2{{0, 0, 2}};
    IntPolynomial one_minus_x_sq{{1, -2, 1}};
    IntPolynomial g = (two_x2 * fp).truncated(n_max) - one_minus_x_sq;
    IntPolynomial lhs = (g * g).truncated(n_max);
    IntPolynomial rhs = IntPolynomial{{1, -4, 2, 0, 1}}.truncated(n_max);
    return lhs == rhs;
}

inline bool verify_algebraic_gf(int n_max) {
    std::vector<BigInt> series;
    for (int n = 0; n <= n_max; ++n) series.push_back(dduu_avoiding_dyck_count(n));
    return algebraic_gf_identity_holds(series, n_max);
}

/// Generating functions established for three of the registered pairs; the
/// series of each matches the avoider counts term by term (n >= 1).
inline RationalGF registered_gf(const std::string& pair_key) {
    if (pair_key == "021,102") // (z^4-3z^3+6z^2-4z+1)/((z-1)^3(2z-1))
        return RationalGF{IntPolynomial{{1, -4, 6, -3, 1}}, IntPolynomial{{1, -5, 9, -7, 2}}};
    if (pair_key == "102,120") // (x^3-5x^2+4x-1)/((x-1)(2x-1)^2)
        return RationalGF{IntPolynomial{{-1, 4, -5, 1}}, IntPolynomial{{-1, 5, -8, 4}}};
    if (pair_key == "101,120") // (x-1)^3/(3x^3-5x^2+4x-1)
        return RationalGF{IntPolynomial{{-1, 3, -3, 1}}, IntPolynomial{{-1, 4, -5, 3}}};
    throw std::invalid_argument("registered_gf: no generating function for " + pair_key);
}

struct FormulaEntry {
    std::string key;         // canonical pattern-pair key, e.g. "000,001"
    std::string description; // human-readable formula
    std::string oeis;
    std::string note; // optional remark worth surfacing in reports
    std::function<BigInt(int)> value;
};

class UnregisteredPair : public std::invalid_argument {
public:
    explicit UnregisteredPair(const std::string& key)
        : std::invalid_argument("no registered formula for pattern set {" + key + "}") {}
};

/// Exact enumeration formulas for the sixteen registered pattern pairs.
class FormulaRegistry {
public:
    static const FormulaRegistry& instance() {
        static const FormulaRegistry reg;
        return reg;
    }

    const std::vector<FormulaEntry>& entries() const { return entries_; }

    const FormulaEntry* find(const std::string& key) const {
        for (const auto& e : entries_)
            if (e.key == key) return &e;
        return nullptr;
    }

    const FormulaEntry& at(const PatternSet& pair) const {
        const FormulaEntry* e = find(pair.str());
        if (!e) throw UnregisteredPair(pair.str());
        return *e;
    }

private:
    FormulaRegistry() {
        auto add = [&](std::string key, std::string desc, std::string oeis,
                       std::function<BigInt(int)> fn, std::string note = "") {
            entries_.push_back({std::move(key), std::move(desc), std::move(oeis),
                                std::move(note), std::move(fn)});
        };
        add("010,021", "2^(n-1)", "A000079", [](int n) { return pow2(n - 1); });
        add("101,201", "Catalan C(n)", "A000108", [](int n) { return catalan(n); });
        add("101,210", "(3^(n-1)+1)/2", "A007051",
            [](int n) { return (pow3(n - 1) + 1) / 2; });
        add("000,012", "1,2,3,3,0,0,...", "finite",
            [](int n) { return BigInt(n == 1 ? 1 : n == 2 ? 2 : n <= 4 ? 3 : 0); });
        add("000,011", "n", "A000027", [](int n) { return BigInt(n); });
        add("000,001", "Fibonacci F(n+1)", "A000045", [](int n) { return fibonacci(n + 1); });
        add("011,100", "n(n-1)/2 + 1", "A000124",
            [](int n) { return BigInt(n) * (n - 1) / 2 + 1; });
        add("001,100", "F(n+2) - 1", "A000071", [](int n) { return fibonacci(n + 2) - 1; });
        add("001,210", "C(n,3) + n", "A000125", [](int n) { return binomial(n, 3) + n; });
        add("000,101", "Motzkin M(n)", "A001006", [](int n) { return motzkin(n); });
        add("100,101", "DDUU-avoiding Dyck words of semilength n", "A025242",
            [](int n) { return dduu_avoiding_dyck_count(n); });
        add("021,102", "3*2^(n-1) - C(n+1,2) - 1", "A116702",
            [](int n) { return 3 * pow2(n - 1) - binomial(n + 1, 2) - 1; });
        add("102,120", "(n-1)*2^(n-2) + 1", "A005183",
            [](int n) { return n == 1 ? BigInt(1) : BigInt(n - 1) * pow2(n - 2) + 1; },
            "also the series of (x^3-5x^2+4x-1)/((x-1)(2x-1)^2)");
        add("101,120", "series of (x-1)^3/(3x^3-5x^2+4x-1)", "A116703", [](int n) {
            auto c = series_of_rational(registered_gf("101,120"), n);
            return c[static_cast<std::size_t>(n)];
        });
        add("101,110", "F(2n-1)", "A001519", [](int n) { return fibonacci(2 * n - 1); },
            "a(5) = 34; one published term list for this pair omits that value");
        add("201,210", "sum_k C(n-1,k)*Catalan(k)", "A007317", [](int n) {
            BigInt s = 0;
            for (int k = 0; k <= n - 1; ++k) s += binomial(n - 1, k) * catalan(k);
            return s;
        });
    }

    std::vector<FormulaEntry> entries_;
};

/// Exact value of the registered formula for one of the sixteen pairs, n >= 1.
inline BigInt formula_value(const PatternSet& pair, int n) {
    if (n < 1) throw std::invalid_argument("formula_value: n must be >= 1");
    return FormulaRegistry::instance().at(pair).value(n);
}

} // namespace ascent
