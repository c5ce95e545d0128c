#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "resitan/arith.hpp"
#include "resitan/errors.hpp"

namespace resitan {
namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Euler's criterion, valid for odd prime p.
int legendre_by_euler(std::int64_t a, std::uint64_t p) {
    std::uint64_t r = mod_reduce(a, p);
    if (r == 0) return 0;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) v = v * r % p;
    return v == 1 ? 1 : -1;
}

TEST(IsPrimeTest, SmallExamples) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(561));  // 3 * 11 * 17, Carmichael
    EXPECT_TRUE(is_prime(31));
}

TEST(IsPrimeTest, AgreesWithTrialDivisionBelowTenThousand) {
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
    }
}

TEST(IsPrimeTest, LargeKnownValues) {
    EXPECT_TRUE(is_prime((1ULL << 61) - 1));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(18446744073709551615ULL));
    // Strong pseudoprimes to many small bases.
    EXPECT_FALSE(is_prime(3215031751ULL));
    EXPECT_FALSE(is_prime(3825123056546413051ULL));
    EXPECT_FALSE(is_prime(4294967297ULL));  // F5 = 641 * 6700417
}

TEST(ModPowTest, Examples) {
    EXPECT_EQ(mod_pow(2, 5, 31), 1u);
    EXPECT_EQ(mod_pow(7, 0, 31), 1u);
    EXPECT_EQ(mod_pow(-2, 14, 113), 112u);
    EXPECT_EQ(mod_pow(-1, 3, 2), 1u);
}

TEST(ModPowTest, ExponentsAdd) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const std::uint64_t p = (rng() % 1'000'000'007ULL) + 2;
        const auto b = static_cast<std::int64_t>(rng());
        const std::uint64_t e1 = rng() % 100000, e2 = rng() % 100000;
        EXPECT_EQ(mod_pow(b, e1 + e2, p), mul_mod(mod_pow(b, e1, p), mod_pow(b, e2, p), p));
    }
}

TEST(JacobiTest, Examples) {
    EXPECT_EQ(jacobi(-2, 31), -1);
    EXPECT_EQ(jacobi(1, 15), 1);
    EXPECT_EQ(jacobi(2, 3), -1);
    EXPECT_EQ(jacobi(0, 1), 1);
    EXPECT_EQ(jacobi(5, 15), 0);
    EXPECT_THROW(jacobi(3, 8), InvalidInputError);
}

TEST(JacobiTest, MatchesEulerCriterionForPrimes) {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 101, 113, 337, 997}) {
        for (std::int64_t a = -50; a < static_cast<std::int64_t>(p); ++a) {
            ASSERT_EQ(jacobi(a, p), legendre_by_euler(a, p)) << a << " " << p;
        }
    }
}

TEST(JacobiTest, MultiplicativeInNumerator) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const std::uint64_t n = 2 * (rng() % 50000) + 1;
        const auto a = static_cast<std::int64_t>(rng() % 200000) - 100000;
        const auto b = static_cast<std::int64_t>(rng() % 200000) - 100000;
        EXPECT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
    }
}

TEST(PrimeContextTest, RejectsNonOddPrimes) {
    EXPECT_THROW(PrimeContext(2), InvalidInputError);
    EXPECT_THROW(PrimeContext(1), InvalidInputError);
    EXPECT_THROW(PrimeContext(9), InvalidInputError);
    const PrimeContext ctx(31);
    EXPECT_EQ(ctx.p_minus_1(), 30u);
    EXPECT_EQ(ctx.p_minus_1_factors(), (std::vector<std::uint64_t>{2, 3, 5}));
    EXPECT_EQ(ctx.primitive_root(), 3u);
    EXPECT_EQ(ctx.reduce(-2), 29u);
}

TEST(PrimeContextTest, FactorsLargePrimes) {
    const PrimeContext ctx(18446744073709551557ULL);
    std::uint64_t n = ctx.p_minus_1();
    for (auto q : ctx.p_minus_1_factors()) {
        EXPECT_TRUE(is_prime(q));
        while (n % q == 0) n /= q;
    }
    EXPECT_EQ(n, 1u);
}

TEST(SqrtModTest, Examples) {
    EXPECT_EQ(sqrt_mod(4, PrimeContext(31)), std::optional<std::uint64_t>(2));
    EXPECT_EQ(sqrt_mod(31 - 27, PrimeContext(31)), std::optional<std::uint64_t>(2));
    EXPECT_EQ(sqrt_mod(3, PrimeContext(7)), std::nullopt);
    EXPECT_EQ(sqrt_mod(0, PrimeContext(7)), std::optional<std::uint64_t>(0));
    EXPECT_THROW(sqrt_mod(7, PrimeContext(7)), InvalidInputError);
}

TEST(SqrtModTest, AgreesWithJacobiForEveryResidue) {
    for (std::uint64_t p : primes_in_range(3, 1500)) {
        const PrimeContext ctx(p);
        for (std::uint64_t a = 1; a < p; ++a) {
            const auto r = sqrt_mod(a, ctx);
            ASSERT_EQ(r.has_value(), jacobi(static_cast<std::int64_t>(a), p) == 1) << a << " mod " << p;
            if (r) {
                EXPECT_EQ(mul_mod(*r, *r, p), a);
                EXPECT_LE(*r, p - *r);
                EXPECT_GT(*r, 0u);
            }
        }
    }
}

TEST(SqrtModTest, LargeModulusWithHighTwoAdicity) {
    // 998244353 = 119 * 2^23 + 1 exercises the full Tonelli-Shanks loop.
    const PrimeContext ctx(998244353);
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 123456789ULL}) {
        const auto r = sqrt_mod(a, ctx);
        if (r) EXPECT_EQ(mul_mod(*r, *r, ctx.p()), a);
    }
}

TEST(IsqrtTest, Boundaries) {
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(15), 3u);
    EXPECT_EQ(isqrt(16), 4u);
    EXPECT_EQ(isqrt(18446744073709551615ULL), 4294967295ULL);
}

TEST(PrimesInRangeTest, CountsAndBounds) {
    EXPECT_EQ(primes_in_range(1, 100).size(), 25u);
    EXPECT_EQ(primes_in_range(3, 10000).size(), 1228u);
    EXPECT_TRUE(primes_in_range(24, 28).empty());
    EXPECT_TRUE(primes_in_range(50, 5).empty());
}

}  // namespace
}  // namespace resitan
