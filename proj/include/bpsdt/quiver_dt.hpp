#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bpsdt/errors.hpp"
#include "bpsdt/number_theory.hpp"
#include "bpsdt/rational.hpp"
#include "bpsdt/series.hpp"

namespace bpsdt {

/// Generalized DT invariants DT_n^{(m)} of the m-loop quiver, keyed by (m, n).
class DtTable {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    void set(std::uint32_t m, std::uint32_t n, Integer value) {
        if (n == 0) detail::fail_input("DtTable: n must be positive");
        if (value < 0) detail::fail_consistency("DtTable: negative DT value");
        entries_[{m, n}] = std::move(value);
    }

    [[nodiscard]] const Integer& at(std::uint32_t m, std::uint32_t n) const {
        auto it = entries_.find({m, n});
        if (it == entries_.end()) {
            detail::fail_input("DtTable: no entry for (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
        }
        return it->second;
    }

    /// DT_1^{(m)}, ..., DT_{n_max}^{(m)} for one loop count.
    [[nodiscard]] std::vector<Integer> row(std::uint32_t m) const {
        std::vector<Integer> out;
        for (auto it = entries_.lower_bound({m, 1}); it != entries_.end() && it->first.first == m; ++it) {
            out.push_back(it->second);
        }
        return out;
    }

    [[nodiscard]] std::uint32_t m_max() const { return entries_.empty() ? 0 : entries_.rbegin()->first.first; }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] const std::map<Key, Integer>& entries() const { return entries_; }

private:
    std::map<Key, Integer> entries_;
};

/// Generating series F(t) = sum_n chi(Hilb_n^{(m)}) t^n of the framed m-loop
/// quiver; chi[0] = 1.
struct EulerSeries {
    std::uint32_t m = 1;
    std::vector<Integer> chi;

    friend bool operator==(const EulerSeries&, const EulerSeries&) = default;
};

namespace detail {

enum class DtBinomialIndex { divisor, literal_total };

// sum_{d | n} mu(n/d) (-1)^{(m-1)(n-d)} binom(top(d) - 1, d - 1), with
// top(d) = m d, or m n for the literal printing of the formula.
inline Integer dt_divisor_sum(std::uint32_t m, std::uint32_t n, DtBinomialIndex index) {
    Integer sum = 0;
    const auto mm = static_cast<std::int64_t>(m);
    const auto nn = static_cast<std::int64_t>(n);
    for (auto d64 : divisors(n)) {
        const auto d = static_cast<std::int64_t>(d64);
        const int mu = mobius(n / d64);
        if (mu == 0) continue;
        const std::int64_t top = index == DtBinomialIndex::divisor ? mm * d : mm * nn;
        const int sign = sign_power((mm - 1) * (nn - d));
        sum += mu * sign * gen_binom(top - 1, d64 - 1);
    }
    return sum;
}

/// The formula with binom(mn - 1, d - 1). Not integral in general; kept only
/// to document why the divisor-indexed form is the right one.
inline Rational dt_closed_literal(std::uint32_t m, std::uint32_t n) {
    if (n == 0) fail_input("dt_closed_literal: n must be positive");
    const Integer n2 = Integer(n) * n;
    return Rational(dt_divisor_sum(m, n, DtBinomialIndex::literal_total), n2);
}

} // namespace detail

/// DT_n^{(m)} = (1/n^2) sum_{d | n} mu(n/d) (-1)^{(m-1)(n-d)} binom(m d - 1, d - 1).
///
/// The divisor sum is formed over the integers and divided by n^2 once; a
/// remainder or a negative result throws ConsistencyError.
inline Integer dt_closed(std::uint32_t m, std::uint32_t n) {
    if (n == 0) detail::fail_input("dt_closed: n must be positive");
    const Integer sum = detail::dt_divisor_sum(m, n, detail::DtBinomialIndex::divisor);
    const Integer n2 = Integer(n) * n;
    if (!mpz_divisible_p(sum.get_mpz_t(), n2.get_mpz_t())) {
        detail::fail_consistency("dt_closed: divisor sum " + sum.get_str() + " not divisible by " + n2.get_str() +
                                 " at (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), n2.get_mpz_t());
    if (q < 0) {
        detail::fail_consistency("dt_closed: negative value " + q.get_str() + " at (m=" + std::to_string(m) +
                                 ", n=" + std::to_string(n) + ")");
    }
    return q;
}

/// All DT_n^{(m)} with 0 <= m <= m_max, 1 <= n <= n_max.
inline DtTable dt_table(std::uint32_t m_max, std::uint32_t n_max) {
    if (n_max == 0) detail::fail_input("dt_table: n_max must be at least 1");
    DtTable table;
    for (std::uint32_t m = 0; m <= m_max; ++m) {
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            table.set(m, n, dt_closed(m, n));
        }
    }
    return table;
}

/// Reads DT_1..DT_N off F((-1)^{m-1} t) = prod_n (1 - t^n)^{-(-1)^{(m-1)n} n DT_n}.
inline std::vector<Integer> dt_from_euler(const EulerSeries& e) {
    if (e.chi.empty() || e.chi[0] != 1) {
        detail::fail_input("dt_from_euler: chi[0] must be 1");
    }
    const std::size_t order = e.chi.size() - 1;
    std::vector<Rational> coeffs(e.chi.begin(), e.chi.end());
    const Rational sign = sign_power(static_cast<std::int64_t>(e.m) - 1);
    const auto exponents = product_decompose(TruncatedSeries(order, std::move(coeffs)).rescaled(sign));

    std::vector<Integer> dt;
    dt.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const int s = sign_power((static_cast<std::int64_t>(e.m) - 1) * static_cast<std::int64_t>(n));
        const Rational value = -exponents[n - 1] * Rational(s) / Rational(n);
        if (!value.is_integer()) {
            detail::fail_input("dt_from_euler: non-integral DT_" + std::to_string(n) + " = " + value.str() +
                               "; Euler input is inconsistent");
        }
        dt.push_back(value.numerator());
    }
    return dt;
}

/// Inverse of dt_from_euler: expands the product to order N.
inline EulerSeries euler_from_dt(std::uint32_t m, const std::vector<Integer>& dt, std::size_t order) {
    std::vector<Rational> exponents;
    exponents.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const Integer value = n <= dt.size() ? dt[n - 1] : Integer(0);
        const int s = sign_power((static_cast<std::int64_t>(m) - 1) * static_cast<std::int64_t>(n));
        exponents.emplace_back(-s * Integer(static_cast<unsigned long>(n)) * value);
    }
    const Rational sign = sign_power(static_cast<std::int64_t>(m) - 1);
    // F((-1)^{m-1} t) is the product; undo the substitution (it is an involution).
    const TruncatedSeries f = product_compose(exponents, order).rescaled(sign);

    EulerSeries out{m, {}};
    out.chi.reserve(order + 1);
    for (auto c : f.coefficients()) {
        if (!c.is_integer()) detail::fail_consistency("euler_from_dt: non-integral coefficient " + c.str());
        out.chi.push_back(c.numerator());
    }
    return out;
}

} // namespace bpsdt
