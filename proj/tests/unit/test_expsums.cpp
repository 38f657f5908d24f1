#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "burgess/errors.hpp"
#include "burgess/expsums.hpp"
#include "burgess/parallel.hpp"

using namespace burgess;

namespace {

cplx naive_kloosterman(i64 a, i64 b, i64 c) {
    cplx s = 0;
    for (i64 x = 0; x < c; ++x) {
        for (i64 y = 0; y < c; ++y) {
            if (x * y % c != 1 % c) continue;
            s += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(mod(a * x + b * y, c)) / c);
        }
    }
    return s;
}

}  // namespace

TEST(Kloosterman, Examples) {
    EXPECT_LT(std::abs(kloosterman(1, 1, 1) - cplx(1, 0)), 1e-15);
    EXPECT_NEAR(kloosterman(1, 1, 5).real(), 2 + 2 * std::cos(4 * std::numbers::pi / 5), 1e-14);
    EXPECT_NEAR(kloosterman(1, 1, 5).real(), 0.381966, 1e-6);
    EXPECT_NEAR(kloosterman(1, 1, 5).imag(), 0.0, 1e-14);

    KloostermanQuery q{0, 1, 7, build_character(7, 0)};
    EXPECT_LT(std::abs(kloosterman(q) - cplx(-1, 0)), 1e-13);
}

TEST(Kloosterman, AgreesWithPairEnumeration) {
    for (i64 c : {1, 2, 6, 9, 12, 25, 30}) {
        for (i64 a = -3; a < 5; ++a) {
            for (i64 b = 0; b < 4; ++b) EXPECT_LT(std::abs(kloosterman(a, b, c) - naive_kloosterman(a, b, c)), 1e-12);
        }
    }
}

TEST(Kloosterman, TwistModulusMustDivide) {
    KloostermanQuery q{1, 1, 10, build_character(3, 1)};
    EXPECT_THROW(kloosterman(q), TwistModulusMismatch);
    EXPECT_THROW(kloosterman(1, 1, 0), std::invalid_argument);
}

TEST(Kloosterman, SymmetricAndReal) {
    auto rng = stream_rng(3, 0);
    for (int t = 0; t < 500; ++t) {
        const i64 c = uniform_int(rng, 1, 10000);
        const i64 a = uniform_int(rng, -c, 2 * c);
        const i64 b = uniform_int(rng, -c, 2 * c);
        const cplx s = kloosterman(a, b, c);
        EXPECT_LT(std::abs(s - kloosterman(b, a, c)), 1e-9);
        EXPECT_LT(std::abs(s.imag()), 1e-9);
    }
}

TEST(Kloosterman, TwistedConjugation) {
    const auto psi = build_character(7, 2);
    for (i64 a = 0; a < 7; ++a) {
        const cplx s = kloosterman({a, 3, 21, psi});
        const cplx t = kloosterman({-a, -3, 21, psi.conj()});
        EXPECT_LT(std::abs(s - std::conj(t)), 1e-12);
    }
}

TEST(Kloosterman, TwistedMultiplicativity) {
    // S(a, b; c1 c2) = S(c2bar a, c2bar b; c1) S(c1bar a, c1bar b; c2).
    auto rng = stream_rng(4, 0);
    for (int t = 0; t < 200; ++t) {
        const i64 c1 = uniform_int(rng, 1, 100);
        const i64 c2 = uniform_int(rng, 1, 100);
        if (gcd(c1, c2) != 1) continue;
        const i64 a = uniform_int(rng, 0, c1 * c2 - 1);
        const i64 b = uniform_int(rng, 0, c1 * c2 - 1);
        const i64 i2 = inv_mod(c2, c1), i1 = inv_mod(c1, c2);
        const cplx lhs = kloosterman(a, b, c1 * c2);
        const cplx rhs = kloosterman(mul_mod(i2, a, c1), mul_mod(i2, b, c1), c1) *
                         kloosterman(mul_mod(i1, a, c2), mul_mod(i1, b, c2), c2);
        EXPECT_LT(std::abs(lhs - rhs), 1e-9);
    }
}

TEST(Kloosterman, WeilBoundAtPrimes) {
    auto rng = stream_rng(5, 0);
    for (i64 c : primes_up_to(499)) {
        for (int t = 0; t < 20; ++t) {
            const i64 a = uniform_int(rng, 1, c - 1), b = uniform_int(rng, 1, c - 1);
            EXPECT_LE(std::abs(kloosterman(a, b, c)), 2 * std::sqrt(static_cast<double>(c)) + 1e-9);
        }
    }
}

TEST(RationalCharSum, Examples) {
    const auto chi = quadratic_character(7);
    EXPECT_LT(std::abs(rational_char_sum(RationalCharSumSpec(chi, {0, 1, 0}, {1, 0, 0}))), 1e-12);

    const RationalCharSumSpec same(chi, {1, 0, 1}, {1, 0, 1});
    EXPECT_TRUE(same.degenerate());
    EXPECT_LT(std::abs(rational_char_sum(same) - cplx(7.0 - static_cast<double>(same.excluded().size()), 0)), 1e-12);

    // x^2 + 1 over x^2 + 2 by hand over F_7.
    cplx expected = 0;
    for (i64 x = 0; x < 7; ++x) {
        const i64 num = (x * x + 1) % 7, den = (x * x + 2) % 7;
        if (den == 0 || num == 0) continue;
        expected += chi(num * inv_mod(den, 7));
    }
    EXPECT_LT(std::abs(rational_char_sum(RationalCharSumSpec(chi, {1, 0, 1}, {2, 0, 1})) - expected), 1e-12);
}

TEST(RationalCharSum, ExcludedPoints) {
    const auto chi = quadratic_character(11);
    const RationalCharSumSpec s(chi, {0, 1, 0}, {-3, 0, 1}, {0, 5});
    // x^2 - 3 has roots 5, 6 mod 11.
    EXPECT_EQ(s.excluded(), (std::vector<i64>{0, 5, 6}));
    EXPECT_THROW(RationalCharSumSpec(chi, {1, 0, 0}, {0, 0, 0}), DenominatorZeroEverywhere);
    EXPECT_THROW(RationalCharSumSpec(chi, {1, 0, 0}, {-3, 0, 1}, {1, 2, 3}), std::invalid_argument);
}

TEST(RationalCharSum, DegeneracyFlag) {
    const auto quad = quadratic_character(13);
    const auto cubic = build_character(13, 4);  // order 3
    // (x + 1)^2 / 5 is a square times a constant.
    EXPECT_TRUE(RationalCharSumSpec(quad, {1, 2, 1}, {5, 0, 0}).degenerate());
    EXPECT_FALSE(RationalCharSumSpec(cubic, {1, 2, 1}, {5, 0, 0}).degenerate());
    EXPECT_TRUE(RationalCharSumSpec(quad, {3, 0, 0}, {1, 0, 0}).degenerate());
    EXPECT_FALSE(RationalCharSumSpec(quad, {0, 1, 0}, {1, 1, 0}).degenerate());
    EXPECT_TRUE(RationalCharSumSpec(quad, {0, 0, 0}, {1, 1, 0}).degenerate());
    // Degenerate sums sit near sqrt(M) * sqrt(M).
    const auto rec = weil_record(RationalCharSumSpec(quad, {4, 4, 1}, {1, 0, 0}));
    EXPECT_TRUE(rec.degenerate);
    EXPECT_NEAR(rec.ratio, 12.0 / std::sqrt(13.0), 1e-12);
}

TEST(WeilScan, BoundAndDeterminism) {
    const std::vector<i64> Ms{11, 13, 101};
    const auto a = weil_scan(Ms, 50, 99, 1);
    const auto b = weil_scan(Ms, 50, 99, 3);
    ASSERT_EQ(a.size(), 3u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].records.size(), 50u);
        EXPECT_LE(a[i].ratio_max, 4.0);
        EXPECT_LE(a[i].ratio_median, a[i].ratio_max);
        EXPECT_EQ(a[i].degenerate_count, b[i].degenerate_count);
        for (std::size_t j = 0; j < a[i].records.size(); ++j) {
            EXPECT_FALSE(a[i].records[j].degenerate);
            EXPECT_EQ(a[i].records[j].spec, b[i].records[j].spec);
            EXPECT_EQ(a[i].records[j].abs_sum, b[i].records[j].abs_sum);
        }
    }
    const std::vector<i64> bad{15};
    EXPECT_THROW(weil_scan(bad, 5, 1), NotPrime);
}
