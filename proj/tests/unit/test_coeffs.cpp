#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>

#include "burgess/coeffs.hpp"
#include "burgess/errors.hpp"

using namespace burgess;

namespace {

// q prod_{n>=1} (1 - q^n)^24 by dense polynomial multiplication.
std::vector<Int128> delta_by_products(int order) {
    std::vector<Int128> poly(static_cast<std::size_t>(order + 1), 0);
    poly[1] = 1;
    for (int n = 1; n <= order; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int d = order; d >= n; --d) poly[static_cast<std::size_t>(d)] -= poly[static_cast<std::size_t>(d - n)];
        }
    }
    return poly;
}

}  // namespace

TEST(Divisor, Examples) {
    const auto d = divisor_table(1'000'000);
    EXPECT_EQ(d(1), 1.0);
    EXPECT_EQ(d(12), 6.0);
    i64 brute = 0;
    for (i64 k = 1; k * k <= 1'000'000; ++k) {
        if (1'000'000 % k == 0) brute += (k * k == 1'000'000) ? 1 : 2;
    }
    EXPECT_EQ(brute, 49);
    EXPECT_EQ(d(1'000'000), 49.0);
    EXPECT_EQ(d.kind(), CoefficientKind::Divisor);
    EXPECT_THROW(divisor_table(0), std::invalid_argument);
}

TEST(Divisor, MultiplicativeAndTwoAtPrimes) {
    const auto d = divisor_table(5000);
    for (i64 p : primes_up_to(5000)) EXPECT_EQ(d(p), 2.0);
    for (i64 m = 1; m <= 70; ++m) {
        for (i64 n = 1; n <= 70; ++n) {
            if (gcd(m, n) == 1) EXPECT_EQ(d(m * n), d(m) * d(n));
        }
    }
}

TEST(Divisor, DirichletAsymptotic) {
    const double gamma = 0.57721566490153286;
    const auto d = divisor_table(100000);
    for (i64 N : {1000, 10000, 100000}) {
        double s = 0;
        for (i64 n = 1; n <= N; ++n) s += d(n);
        const double Nd = static_cast<double>(N);
        EXPECT_LE(std::abs(s - (Nd * std::log(Nd) + (2 * gamma - 1) * Nd)), 10 * std::sqrt(Nd));
    }
}

TEST(Tau, AgreesWithDenseExpansion) {
    const auto dense = delta_by_products(200);
    const auto tau = compute_tau(200);
    for (i64 n = 1; n <= 200; ++n) EXPECT_TRUE(tau[n] == dense[static_cast<std::size_t>(n)]) << n;
    EXPECT_TRUE(tau[1] == 1);
    EXPECT_TRUE(tau[2] == -24);
    EXPECT_TRUE(tau[3] == 252);
    EXPECT_TRUE(tau[6] == -6048);
    EXPECT_TRUE(tau[6] == tau[2] * tau[3]);
}

TEST(Tau, WidthsAgreeAndWideValues) {
    const auto a = compute_tau(3000, IntWidth::Int256);
    const auto b = compute_tau(3000, IntWidth::Int128);
    for (i64 n = 1; n <= 3000; ++n) ASSERT_TRUE(a[n] == b[n]) << n;
    EXPECT_EQ(int128_to_string(a[2]), "-24");
    EXPECT_EQ(int128_to_string(a[10]), "-115920");
    EXPECT_EQ(int128_to_string(a[100]), "37534859200");
    EXPECT_EQ(int128_to_string(0), "0");
}

TEST(Tau, HeckeRelationAtPrimePowers) {
    const auto s = tau_table(20000);
    for (i64 p : primes_up_to(150)) {
        i64 pk = p;
        while (pk * p <= s.max_index()) {
            const double prev = pk == p ? 1.0 : s(pk / p);
            EXPECT_NEAR(s(p) * s(pk), s(pk * p) + prev, 1e-9) << p << "^k=" << pk;
            pk *= p;
        }
    }
}

TEST(Tau, DeligneBound) {
    const auto s = tau_table(20000);
    EXPECT_EQ(s(1), 1.0);
    for (i64 p : primes_up_to(20000)) EXPECT_LE(std::abs(s(p)), 2.0) << p;
    EXPECT_THROW(tau_table(20, 10), std::invalid_argument);
}

TEST(Tau, CacheRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "burgess_tau_test.bin";
    std::filesystem::remove(path);
    const auto first = load_or_compute_tau(500, path);
    ASSERT_TRUE(std::filesystem::exists(path));
    const auto cached = read_tau_cache(path, 500);
    ASSERT_TRUE(cached.has_value());
    for (i64 n = 1; n <= 500; ++n) EXPECT_TRUE((*cached)[n] == first[n]);
    EXPECT_FALSE(read_tau_cache(path, 100000).has_value());
    const auto grown = load_or_compute_tau(800, path);
    EXPECT_TRUE(grown[800] == compute_tau(800)[800]);
    std::filesystem::remove(path);
    EXPECT_FALSE(read_tau_cache(path, 1).has_value());
}

TEST(Amplifier, DivisorKind) {
    const auto d = divisor_table(100);
    const auto set = select_amplifier_primes(10, d);
    EXPECT_EQ(set.primes, (std::vector<i64>{11, 13, 17, 19}));
    EXPECT_EQ(set.weight_total, 16.0);
    const auto edge = select_amplifier_primes(2, d);
    for (i64 l : edge.primes) EXPECT_TRUE(l == 2 || l == 3);
    EXPECT_THROW(select_amplifier_primes(1, d), std::invalid_argument);
    EXPECT_THROW(select_amplifier_primes(60, d), TableTooSmall);
}

TEST(Amplifier, TauKind) {
    const auto s = tau_table(400);
    const auto set = select_amplifier_primes(10, s, 0.5);
    double total = 0;
    for (std::size_t i = 0; i < set.primes.size(); ++i) {
        const i64 l = set.primes[i];
        EXPECT_TRUE(is_prime(l));
        EXPECT_GE(l, 10);
        EXPECT_LE(l, 20);
        if (i > 0) EXPECT_GE(std::abs(s(set.primes[i - 1])), std::abs(s(l)));
        total += s(l) * s(l);
    }
    EXPECT_NEAR(set.weight_total, total, 1e-12);
}

TEST(Amplifier, UnreachableThreshold) {
    std::vector<double> v(41, 0.0);
    v[1] = 1.0;
    const CoefficientStream weak(CoefficientKind::TauNormalized, v);
    EXPECT_THROW(select_amplifier_primes(20, weak), ThresholdUnreachable);
}
