#pragma once

#include "ascent/bigint.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascent {

/// Integer polynomial stored by ascending degree with no trailing zero
/// coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(c));
    }

    /// Drops every term of degree above `order`.
    IntPolynomial truncated(int order) const {
        if (order < 0) return {};
        std::vector<BigInt> c(coeffs_.begin(),
                              coeffs_.begin() + std::min(coeffs_.size(),
                                                         static_cast<std::size_t>(order) + 1));
        return IntPolynomial(std::move(c));
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += (coeffs_[i] > 0) ? " + " : " - ";
            else if (coeffs_[i] < 0) s += "-";
            BigInt mag = abs(coeffs_[i]);
            if (mag != 1 || i == 0) s += mag.str();
            if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

/// Ratio of integer polynomials; the denominator needs a nonzero constant
/// term for a power series expansion to exist.
struct RationalGF {
    IntPolynomial num;
    IntPolynomial den;
};

/// First n_max+1 series coefficients of num/den via the linear recurrence the
/// denominator induces.  Exact; throws if any coefficient is non-integral or
/// the denominator constant term vanishes.
inline std::vector<BigInt> series_of_rational(const RationalGF& gf, int n_max) {
    const BigInt d0 = gf.den.coeff(0);
    if (d0 == 0) throw std::invalid_argument("series_of_rational: zero constant term");
    if (n_max < 0) throw std::invalid_argument("series_of_rational: negative order");
    std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        BigInt rhs = gf.num.coeff(static_cast<std::size_t>(n));
        for (int j = 1; j <= std::min(n, gf.den.degree()); ++j)
            rhs -= gf.den.coeff(static_cast<std::size_t>(j)) * c[static_cast<std::size_t>(n - j)];
        if (rhs % d0 != 0)
            throw std::domain_error("series_of_rational: non-integral coefficient at n=" +
                                    std::to_string(n));
        c[static_cast<std::size_t>(n)] = rhs / d0;
    }
    return c;
}

} // namespace ascent
