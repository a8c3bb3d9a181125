#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bpsdt/errors.hpp"
#include "bpsdt/number_theory.hpp"
#include "bpsdt/rational.hpp"

namespace bpsdt {

/// Formal power series a_0 + a_1 t + ... + a_N t^N with exact rational
/// coefficients. Every operation truncates at the shared order N.
class TruncatedSeries {
public:
    /// The zero series of order N.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes coefficients 0..N; missing trailing entries are zero, extra ones
    /// beyond N are dropped.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Cauchy product truncated at N.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// f(c t) for a rational scalar c.
    [[nodiscard]] TruncatedSeries rescaled(const Rational& c) const {
        TruncatedSeries out = *this;
        Rational power = 1;
        for (auto& a : out.coeffs_) {
            a *= power;
            power *= c;
        }
        return out;
    }

private:
    void require_same_order(const TruncatedSeries& o) const {
        if (o.order() != order()) {
            detail::fail_input("series orders differ: " + std::to_string(order()) + " vs " +
                               std::to_string(o.order()));
        }
    }

    std::vector<Rational> coeffs_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

/// Formal logarithm of a series with constant term 1. Uses f L' = f', i.e.
/// n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}.
inline TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f[0] != Rational(1)) {
        detail::fail_input("series_log: constant term must be 1, got " + f[0].str());
    }
    const std::size_t order = f.order();
    TruncatedSeries out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc = Rational(n) * f[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (out[k].is_zero() || f[n - k].is_zero()) continue;
            acc -= Rational(k) * out[k] * f[n - k];
        }
        out[n] = acc / Rational(n);
    }
    return out;
}

/// Formal exponential of a series with constant term 0: n E_n = sum_{k=1}^{n} k g_k E_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries& g) {
    if (!g[0].is_zero()) {
        detail::fail_input("series_exp: constant term must be 0, got " + g[0].str());
    }
    const std::size_t order = g.order();
    TruncatedSeries out = TruncatedSeries::one(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (g[k].is_zero()) continue;
            acc += Rational(k) * g[k] * out[n - k];
        }
        out[n] = acc / Rational(n);
    }
    return out;
}

/// Exponents e_1..e_N with f = prod_n (1 - t^n)^{e_n} mod t^{N+1}.
///
/// With c_k the coefficients of -log f, k c_k = sum_{n | k} n e_n, and Möbius
/// inversion gives n e_n = sum_{d | n} mu(n/d) d c_d.
inline std::vector<Rational> product_decompose(const TruncatedSeries& f) {
    const TruncatedSeries neg_log = TruncatedSeries(f.order()) - series_log(f);
    std::vector<Rational> exponents;
    exponents.reserve(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        Rational acc;
        for (auto d : divisors(n)) {
            const int mu = mobius(n / d);
            if (mu == 0) continue;
            acc += Rational(mu) * Rational(static_cast<unsigned long>(d)) * neg_log[d];
        }
        exponents.push_back(acc / Rational(n));
    }
    return exponents;
}

/// prod_{n=1}^{N} (1 - t^n)^{e_n} truncated at N; entries of `exponents`
/// past N are ignored and absent ones count as zero.
inline TruncatedSeries product_compose(std::span<const Rational> exponents, std::size_t order) {
    // log prod (1 - t^n)^{e_n} = -sum_n e_n sum_{k>=1} t^{nk} / k
    TruncatedSeries log_f(order);
    for (std::size_t n = 1; n <= order && n <= exponents.size(); ++n) {
        const Rational& e = exponents[n - 1];
        if (e.is_zero()) continue;
        for (std::size_t k = 1; n * k <= order; ++k) {
            log_f[n * k] -= e / Rational(k);
        }
    }
    return series_exp(log_f);
}

} // namespace bpsdt
