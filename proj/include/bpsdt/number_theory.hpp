#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bpsdt/errors.hpp"
#include "bpsdt/rational.hpp"

namespace bpsdt {

/// Möbius function by trial division.
inline int mobius(std::uint64_t n) {
    if (n == 0) detail::fail_input("mobius: n must be positive");
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// All positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) detail::fail_input("divisors: n must be positive");
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Binomial coefficient with arbitrary integer upper index, defined by the
/// falling factorial a(a-1)...(a-k+1)/k!. Integer-valued for every integer a;
/// binom(-1, k) = (-1)^k.
inline Integer gen_binom(std::int64_t a, std::uint64_t k) {
    Integer result = 1;
    // result = binom(a, i) before each step; multiplying by (a - i) gives
    // (i + 1) * binom(a, i + 1), so the division is exact.
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= Integer(static_cast<long>(a)) - Integer(static_cast<unsigned long>(i));
        if (result == 0) return result;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return result;
}

} // namespace bpsdt
