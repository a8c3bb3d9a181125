#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bpsdt/quiver_dt.hpp"

using namespace bpsdt;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Euler characteristics of the noncommutative Hilbert schemes are the
// Fuss-Catalan numbers binom(mn, n) / ((m-1)n + 1). Independent of the
// closed DT formula.
EulerSeries fuss_catalan(std::uint32_t m, std::size_t order) {
    EulerSeries e{m, {}};
    for (std::size_t n = 0; n <= order; ++n) {
        Integer b = gen_binom(static_cast<std::int64_t>(m * n), n);
        const Integer den = Integer(static_cast<unsigned long>((m - 1) * n + 1));
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), den.get_mpz_t());
        e.chi.push_back(b);
    }
    return e;
}

} // namespace

TEST(DtClosed, Examples) {
    for (std::uint32_t m = 0; m <= 10; ++m) EXPECT_EQ(dt_closed(m, 1), 1);
    EXPECT_EQ(dt_closed(1, 3), 0);
    EXPECT_EQ(dt_closed(2, 2), 1);
    EXPECT_EQ(dt_closed(2, 3), 1);
    EXPECT_EQ(dt_closed(2, 4), 2);
    EXPECT_EQ(dt_closed(2, 5), 5);
    EXPECT_EQ(dt_closed(5, 2), 2);
    EXPECT_THROW(dt_closed(2, 0), InvalidInput);
}

// Values from direct big-integer evaluation of the divisor sum.
TEST(DtClosed, FrozenRows) {
    EXPECT_EQ(dt_table(5, 8).row(2), ints({1, 1, 1, 2, 5, 13, 35, 100}));
    EXPECT_EQ(dt_table(5, 8).row(3), ints({1, 1, 3, 10, 40, 171, 791, 3828}));
    EXPECT_EQ(dt_table(5, 8).row(4), ints({1, 2, 6, 28, 155, 936, 6041, 41080}));
    EXPECT_EQ(dt_table(5, 8).row(5), ints({1, 2, 10, 60, 425, 3296, 27447, 240312}));
}

TEST(DtClosed, DegenerateQuivers) {
    for (std::uint32_t n = 1; n <= 50; ++n) ASSERT_EQ(dt_closed(1, n), n == 1 ? 1 : 0);
    for (std::uint32_t n = 1; n <= 30; ++n) ASSERT_EQ(dt_closed(0, n), n == 1 ? 1 : 0);
}

TEST(DtClosed, NonnegativeIntegers) {
    for (std::uint32_t m = 0; m <= 8; ++m) {
        for (std::uint32_t n = 1; n <= 24; ++n) ASSERT_GE(dt_closed(m, n), 0);
    }
}

TEST(DtClosed, LiteralIndexIsNotIntegral) {
    EXPECT_EQ(detail::dt_closed_literal(2, 4), Rational::parse("7/4"));
    EXPECT_FALSE(detail::dt_closed_literal(2, 4).is_integer());
}

TEST(DtClosed, AgreesWithFussCatalanEulerSeries) {
    for (std::uint32_t m : {1u, 2u, 3u, 4u}) {
        const auto dt = dt_from_euler(fuss_catalan(m, 12));
        for (std::uint32_t n = 1; n <= 12; ++n) ASSERT_EQ(dt[n - 1], dt_closed(m, n)) << m << " " << n;
    }
}

TEST(DtTable, Rows) {
    EXPECT_EQ(dt_table(1, 4).row(1), ints({1, 0, 0, 0}));
    EXPECT_EQ(dt_table(2, 5).row(2), ints({1, 1, 1, 2, 5}));
    EXPECT_EQ(dt_table(0, 3).row(0), ints({1, 0, 0}));
    const auto t = dt_table(3, 6);
    EXPECT_EQ(t.m_max(), 3u);
    EXPECT_EQ(t.at(3, 4), 10);
    EXPECT_THROW(static_cast<void>(t.at(4, 1)), InvalidInput);
    EXPECT_THROW(dt_table(2, 0), InvalidInput);
}

TEST(DtFromEuler, Examples) {
    EXPECT_EQ(dt_from_euler({1, ints({1, 1, 1, 1})}), ints({1, 0, 0}));
    EXPECT_EQ(dt_from_euler({2, ints({1, 1, 0, 0})}), ints({1, 0, 0}));
    EXPECT_EQ(dt_from_euler({1, ints({1, 0, 0})}), ints({0, 0}));
}

TEST(DtFromEuler, RejectsBadInput) {
    EXPECT_THROW(dt_from_euler({1, ints({2, 1})}), InvalidInput);
    EXPECT_THROW(dt_from_euler({1, {}}), InvalidInput);
    // F = 1 + t^2 would need DT_2 = -1/2 for m = 1.
    EXPECT_THROW(dt_from_euler({1, ints({1, 0, 1})}), InvalidInput);
}

TEST(EulerFromDt, Examples) {
    EXPECT_EQ(euler_from_dt(1, ints({1, 0, 0}), 3).chi, ints({1, 1, 1, 1}));
    EXPECT_EQ(euler_from_dt(2, ints({1, 0, 0}), 3).chi, ints({1, 1, 0, 0}));
    for (std::uint32_t m : {0u, 3u}) EXPECT_EQ(euler_from_dt(m, ints({0, 0, 0}), 3).chi, ints({1, 0, 0, 0}));
}

TEST(EulerFromDt, ClosedFormRowGivesFussCatalan) {
    for (std::uint32_t m : {1u, 2u, 3u}) {
        EXPECT_EQ(euler_from_dt(m, dt_table(m, 10).row(m), 10), fuss_catalan(m, 10));
    }
}

TEST(EulerDt, RoundTrip) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> value(0, 20);
    const std::uint32_t loops[] = {0, 1, 2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t m = loops[trial % 5];
        const std::size_t order = 1 + trial % 20;
        std::vector<Integer> dt(order);
        for (auto& x : dt) x = value(rng);
        ASSERT_EQ(dt_from_euler(euler_from_dt(m, dt, order)), dt) << "trial " << trial;
    }
}

TEST(EulerDt, ClosedFormSelfConsistent) {
    for (std::uint32_t m = 0; m <= 4; ++m) {
        for (std::size_t order = 1; order <= 16; ++order) {
            const auto row = dt_table(m, static_cast<std::uint32_t>(order)).row(m);
            ASSERT_EQ(dt_from_euler(euler_from_dt(m, row, order)), row) << m << " " << order;
        }
    }
}
