#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bpsdt/bps.hpp"
#include "bpsdt/errors.hpp"
#include "bpsdt/number_theory.hpp"
#include "bpsdt/quiver_dt.hpp"
#include "bpsdt/rational.hpp"

namespace bpsdt {

/// Dense square matrix of big integers, row-major, 1-based accessors to match
/// the (s, t) indexing of the correspondence.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 1; i <= n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    Integer& operator()(std::size_t s, std::size_t t) { return data_.at((s - 1) * n_ + (t - 1)); }
    const Integer& operator()(std::size_t s, std::size_t t) const { return data_.at((s - 1) * n_ + (t - 1)); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_) detail::fail_input("matrix dimensions differ");
        IntMatrix out(a.n_);
        for (std::size_t i = 1; i <= a.n_; ++i) {
            for (std::size_t k = 1; k <= a.n_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 1; j <= a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        }
        return out;
    }

    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() < n_) detail::fail_input("vector shorter than matrix dimension");
        std::vector<Rational> out(n_);
        for (std::size_t i = 1; i <= n_; ++i) {
            for (std::size_t j = 1; j <= n_; ++j) {
                if ((*this)(i, j) != 0) out[i - 1] += Rational((*this)(i, j)) * v[j - 1];
            }
        }
        return out;
    }

private:
    std::size_t n_;
    std::vector<Integer> data_;
};

/// N x N corner of C with C_{st} = DT_{s/t}^{(tw - 1)} when t | s, else 0.
struct CorrespondenceMatrix {
    std::uint32_t w = 1;
    IntMatrix entries;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

inline CorrespondenceMatrix build_matrix(std::uint32_t w, std::size_t n) {
    if (w == 0) detail::fail_input("build_matrix: w must be positive");
    if (n == 0) detail::fail_input("build_matrix: dimension must be positive");
    CorrespondenceMatrix c{w, IntMatrix(n)};
    for (std::size_t s = 1; s <= n; ++s) {
        for (auto t : divisors(s)) {
            const auto loops = static_cast<std::uint32_t>(t * w - 1);
            c.entries(s, t) = dt_closed(loops, static_cast<std::uint32_t>(s / t));
        }
    }
    return c;
}

/// Exact inverse by forward substitution. Rejects anything that is not
/// lower triangular with unit diagonal.
inline IntMatrix invert_unit_lower_triangular(const IntMatrix& c) {
    const std::size_t n = c.size();
    for (std::size_t s = 1; s <= n; ++s) {
        if (c(s, s) != 1) detail::fail_input("invert: diagonal entry " + std::to_string(s) + " is not 1");
        for (std::size_t t = s + 1; t <= n; ++t) {
            if (c(s, t) != 0) detail::fail_input("invert: matrix is not lower triangular");
        }
    }
    IntMatrix inv(n);
    // Column j of the inverse solves C x = e_j.
    for (std::size_t j = 1; j <= n; ++j) {
        inv(j, j) = 1;
        for (std::size_t s = j + 1; s <= n; ++s) {
            Integer acc = 0;
            for (std::size_t t = j; t < s; ++t) {
                if (c(s, t) != 0 && inv(t, j) != 0) acc -= c(s, t) * inv(t, j);
            }
            inv(s, j) = acc;
        }
    }
    return inv;
}

inline IntMatrix invert_unit_lower_triangular(const CorrespondenceMatrix& c) {
    return invert_unit_lower_triangular(c.entries);
}

/// [(-1)^{dw+1} d w n_d]_d, the right-hand side of C n_rel = (scaled local BPS).
inline std::vector<Rational> local_scaling_vector(const std::vector<Rational>& n_local, std::uint32_t w) {
    std::vector<Rational> out;
    out.reserve(n_local.size());
    for (std::size_t d = 1; d <= n_local.size(); ++d) {
        const auto dw = static_cast<std::int64_t>(d) * w;
        out.push_back(Rational(sign_power(dw + 1) * dw) * n_local[d - 1]);
    }
    return out;
}

namespace detail {

inline std::size_t resolve_order(std::size_t requested, std::size_t available, const char* op) {
    const std::size_t order = requested == 0 ? available : requested;
    if (order == 0) fail_input(std::string(op) + ": empty input");
    if (available < order) {
        fail_input(std::string(op) + ": need " + std::to_string(order) + " entries, got " + std::to_string(available));
    }
    return order;
}

} // namespace detail

/// Solves C n_rel = local_scaling_vector(n_local) by forward substitution over
/// the first `order` entries (0 means all of them). Uses w from the input's
/// geometry.
inline BpsVector local_to_relative_bps(const BpsVector& n_local, std::size_t order = 0) {
    if (n_local.kind != Kind::local) detail::fail_input("local_to_relative_bps: input must be a local vector");
    const std::size_t n = detail::resolve_order(order, n_local.entries.size(), "local_to_relative_bps");
    const auto w = n_local.geometry.w;
    const CorrespondenceMatrix c = build_matrix(w, n);
    const std::vector<Rational> head(n_local.entries.begin(), n_local.entries.begin() + static_cast<std::ptrdiff_t>(n));
    const std::vector<Rational> rhs = local_scaling_vector(head, w);

    BpsVector out{Kind::relative, n_local.geometry, std::vector<Rational>(n)};
    for (std::size_t s = 1; s <= n; ++s) {
        Rational acc = rhs[s - 1];
        for (auto t : divisors(s)) {
            if (t == s) continue;
            acc -= Rational(c.entries(s, t)) * out.entries[t - 1];
        }
        out.entries[s - 1] = acc;
    }
    return out;
}

/// n_d = (-1)^{dw+1} (C n_rel)_d / (d w).
inline BpsVector relative_to_local_bps(const BpsVector& n_rel, std::size_t order = 0) {
    if (n_rel.kind != Kind::relative) detail::fail_input("relative_to_local_bps: input must be a relative vector");
    const std::size_t n = detail::resolve_order(order, n_rel.entries.size(), "relative_to_local_bps");
    const auto w = n_rel.geometry.w;
    const CorrespondenceMatrix c = build_matrix(w, n);
    const std::vector<Rational> scaled = c.entries.apply(n_rel.entries);

    BpsVector out{Kind::local, n_rel.geometry, std::vector<Rational>(n)};
    for (std::size_t d = 1; d <= n; ++d) {
        const auto dw = static_cast<std::int64_t>(d) * w;
        out.entries[d - 1] = scaled[d - 1] / Rational(sign_power(dw + 1) * dw);
    }
    return out;
}

struct IntegralityReport {
    bool pass = true;
    /// 1-based positions of non-integral entries.
    std::vector<std::size_t> non_integral;
};

inline IntegralityReport integrality_report(const std::vector<Rational>& values) {
    IntegralityReport r;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_integer()) r.non_integral.push_back(i + 1);
    }
    r.pass = r.non_integral.empty();
    return r;
}

inline IntegralityReport integrality_report(const BpsVector& v) { return integrality_report(v.entries); }

} // namespace bpsdt
