#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bpsdt/errors.hpp"
#include "bpsdt/number_theory.hpp"
#include "bpsdt/rational.hpp"

namespace bpsdt {

enum class Kind { local, relative };

inline const char* to_string(Kind k) { return k == Kind::local ? "local" : "relative"; }

/// w = D.beta, the tangency order of the primitive class. Primitivity of beta
/// cannot be read off from series data, so it is carried as a caller's claim.
struct GeometryParams {
    std::uint32_t w = 1;
    bool primitive_class = true;

    friend bool operator==(const GeometryParams&, const GeometryParams&) = default;
};

/// Gromov-Witten values indexed by curve-class multiple d = 1..N (entries[d-1]).
/// Local: I_{K_S}(d beta). Relative: N_S[dw].
struct GwVector {
    Kind kind = Kind::local;
    GeometryParams geometry;
    std::vector<Rational> entries;

    friend bool operator==(const GwVector&, const GwVector&) = default;
};

/// BPS counts indexed by d = 1..N. Local: n_{d beta}. Relative: n_S[dw].
struct BpsVector {
    Kind kind = Kind::local;
    GeometryParams geometry;
    std::vector<Rational> entries;

    friend bool operator==(const BpsVector&, const BpsVector&) = default;
};

namespace detail {

template <class V>
void require_shape(const V& v, Kind expected, const char* op) {
    if (v.kind != expected) {
        fail_input(std::string(op) + ": expected a " + to_string(expected) + " vector, got " +
                   to_string(v.kind));
    }
    if (v.entries.empty()) fail_input(std::string(op) + ": empty input");
    if (v.geometry.w == 0) fail_input(std::string(op) + ": w must be positive");
}

inline Rational inverse_cube(std::size_t k) {
    const Integer c = Integer(static_cast<unsigned long>(k)) * k * k;
    return Rational(Integer(1), c);
}

} // namespace detail

/// I_l = sum_{d k = l} n_d / k^3.
inline GwVector local_gw_from_bps(const BpsVector& n) {
    detail::require_shape(n, Kind::local, "local_gw_from_bps");
    const std::size_t len = n.entries.size();
    GwVector out{Kind::local, n.geometry, std::vector<Rational>(len)};
    for (std::size_t d = 1; d <= len; ++d) {
        const Rational& nd = n.entries[d - 1];
        if (nd.is_zero()) continue;
        for (std::size_t k = 1; d * k <= len; ++k) {
            out.entries[d * k - 1] += nd * detail::inverse_cube(k);
        }
    }
    return out;
}

/// Triangular inversion: n_l = I_l - sum_{k | l, k > 1} n_{l/k} / k^3.
inline BpsVector local_bps_from_gw(const GwVector& gw) {
    detail::require_shape(gw, Kind::local, "local_bps_from_gw");
    const std::size_t len = gw.entries.size();
    BpsVector out{Kind::local, gw.geometry, std::vector<Rational>(len)};
    for (std::size_t l = 1; l <= len; ++l) {
        Rational acc = gw.entries[l - 1];
        for (auto k : divisors(l)) {
            if (k == 1) continue;
            acc -= out.entries[l / k - 1] * detail::inverse_cube(k);
        }
        out.entries[l - 1] = acc;
    }
    return out;
}

/// Contribution of k-fold covers of a rigid relative curve of class d beta:
/// (1/k^2) binom(k(dw - 1) - 1, k - 1), with the generalized binomial.
inline Rational multiple_cover_contribution(std::uint64_t w, std::uint64_t d, std::uint64_t k) {
    if (w == 0 || d == 0 || k == 0) {
        detail::fail_input("multiple_cover_contribution: w, d, k must be positive");
    }
    const auto tangency = static_cast<std::int64_t>(d * w);
    const auto kk = static_cast<std::int64_t>(k);
    const Integer binom = gen_binom(kk * (tangency - 1) - 1, k - 1);
    return Rational(binom, Integer(static_cast<unsigned long>(k * k)));
}

/// N[lw] = sum_{d k = l} n_S[dw] M(w, d, k).
inline GwVector relative_gw_from_bps(const BpsVector& n) {
    detail::require_shape(n, Kind::relative, "relative_gw_from_bps");
    const std::size_t len = n.entries.size();
    const auto w = n.geometry.w;
    GwVector out{Kind::relative, n.geometry, std::vector<Rational>(len)};
    for (std::size_t d = 1; d <= len; ++d) {
        const Rational& nd = n.entries[d - 1];
        if (nd.is_zero()) continue;
        for (std::size_t k = 1; d * k <= len; ++k) {
            out.entries[d * k - 1] += nd * multiple_cover_contribution(w, d, k);
        }
    }
    return out;
}

/// Inverse of relative_gw_from_bps. M(w, d, 1) = 1, so
/// n_S[lw] = N[lw] - sum_{k | l, k > 1} n_S[(l/k)w] M(w, l/k, k).
inline BpsVector relative_bps_from_gw(const GwVector& gw) {
    detail::require_shape(gw, Kind::relative, "relative_bps_from_gw");
    const std::size_t len = gw.entries.size();
    const auto w = gw.geometry.w;
    BpsVector out{Kind::relative, gw.geometry, std::vector<Rational>(len)};
    for (std::size_t l = 1; l <= len; ++l) {
        Rational acc = gw.entries[l - 1];
        for (auto k : divisors(l)) {
            if (k == 1) continue;
            const auto d = l / k;
            acc -= out.entries[d - 1] * multiple_cover_contribution(w, d, k);
        }
        out.entries[l - 1] = acc;
    }
    return out;
}

} // namespace bpsdt
