#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "resitan/cyclotomic.hpp"
#include "resitan/errors.hpp"
#include "resitan/numeric.hpp"
#include "resitan/residues.hpp"

namespace resitan {
namespace {

// Reference values computed with 40-digit mpmath.
constexpr double kPmd3At01 = -1.350160607534187347688;
constexpr double kPmd9At02 = 27.624680448085774174327;

TEST(SignedMagnitudeTest, Arithmetic) {
    const auto a = SignedMagnitude::from_double(-8.0);
    EXPECT_EQ(a.sign, -1);
    EXPECT_DOUBLE_EQ(a.log2_mag, 3.0);
    const auto b = a * SignedMagnitude::from_double(-0.25);
    EXPECT_EQ(b.sign, 1);
    EXPECT_DOUBLE_EQ(b.value(), 2.0);
    EXPECT_EQ((b * SignedMagnitude::from_double(0.0)).sign, 0);
    EXPECT_EQ(SignedMagnitude::from_double(0.0).to_string(), "0");
    EXPECT_EQ(a.to_string(), "-2^3.000000000000");
}

TEST(OnePlusTanTest, MatchesDirectFormula) {
    for (std::uint64_t p : {5ULL, 7ULL, 101ULL}) {
        for (std::uint64_t r = 0; r < p; ++r) {
            const double direct = 1 + std::tan(M_PI * static_cast<double>(r) / p);
            EXPECT_NEAR(one_plus_tan_ratio(r, p).value(), direct, 1e-9 * (1 + std::abs(direct)));
        }
    }
    EXPECT_EQ(one_plus_tan(-0.25).sign, 0);
    EXPECT_EQ(one_plus_tan(0.75).sign, 0);
    EXPECT_THROW(one_plus_tan(0.5), PoleProximityError);
    EXPECT_THROW(one_plus_tan(1.5 + 1e-11), PoleProximityError);
}

TEST(TanProductTest, Examples) {
    const auto v5 = tan_product(PrimeContext(5), 1, 1);
    EXPECT_EQ(v5.sign, -1);
    EXPECT_NEAR(v5.log2_mag, 2.0, 1e-12);
    const auto v31 = tan_product(PrimeContext(31), 3, 1);
    EXPECT_EQ(v31.sign, 1);
    EXPECT_NEAR(v31.value(), 32.0, 1e-9);
    const auto v113 = tan_product(PrimeContext(113), 4, 1);
    EXPECT_NEAR(v113.value(), -16384.0, 1e-6);
    EXPECT_THROW(tan_product(PrimeContext(13), 4, 1), HypothesisError);
    EXPECT_THROW(tan_product(PrimeContext(13), 3, 13), InvalidInputError);
}

TEST(TanProductTest, IndependentOfMultiplier) {
    for (std::uint64_t p : {73ULL, 89ULL, 113ULL, 337ULL}) {
        const PrimeContext ctx(p);
        for (std::uint32_t m = 1; 2 * m <= p - 1; ++m) {
            if ((p - 1) % (2 * m) != 0 || !is_mth_residue(2, ctx, m)) continue;
            const auto base = tan_product(ctx, m, 1);
            for (std::int64_t a = 2; a < static_cast<std::int64_t>(p); a += 7) {
                const auto v = tan_product(ctx, m, a);
                ASSERT_EQ(v.sign, base.sign) << p << " " << m << " " << a;
                ASSERT_NEAR(v.log2_mag, base.log2_mag, 1e-9);
            }
        }
    }
}

TEST(TanProductTest, CosetsRefineTheFullProduct) {
    // The factor multiset over R_1(p) is the union over cosets c R_m(p).
    for (std::uint64_t p : {31ULL, 41ULL, 97ULL}) {
        const PrimeContext ctx(p);
        const auto all = residue_set(ctx, 1).members;
        for (std::uint32_t m = 1; 2 * m <= p - 1; ++m) {
            if ((p - 1) % (2 * m) != 0) continue;
            const auto sub = residue_set(ctx, m);
            std::vector<std::uint64_t> covered;
            std::vector<bool> used(p, false);
            for (std::uint64_t c = 1; c < p; ++c) {
                if (used[c]) continue;
                for (auto k : sub.members) {
                    const auto v = c * k % p;
                    used[v] = true;
                    covered.push_back(3 * v % p);
                }
            }
            std::vector<std::uint64_t> direct;
            for (auto k : all) direct.push_back(3 * k % p);
            std::sort(covered.begin(), covered.end());
            std::sort(direct.begin(), direct.end());
            ASSERT_EQ(covered, direct) << p << " " << m;
        }
    }
}

TEST(VerifyTheoremMainNumericTest, Examples) {
    const auto r = verify_theorem_main_numeric(PrimeContext(31), 3, 1, 1e-6);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_EQ(r.expected, "+2^5.000000000000 rel_tol=1e-06");
    const auto r30 = verify_theorem_main_numeric(PrimeContext(31), 3, 30, 1e-6);
    EXPECT_EQ(r30.status, Status::pass);
    EXPECT_EQ(r30.expected, r.expected);
    const auto r5 = verify_theorem_main_numeric(PrimeContext(5), 1, 1, 1e-6);
    EXPECT_EQ(r5.status, Status::pass);
    EXPECT_EQ(r5.expected, "-2^2.000000000000 rel_tol=1e-06");
    EXPECT_THROW(verify_theorem_main_numeric(PrimeContext(13), 3, 1, 1e-6), HypothesisError);
}

TEST(VerifyTheoremMainNumericTest, SignAgreesWithExactCheck) {
    for (auto p : primes_in_range(3, 200)) {
        const PrimeContext ctx(p);
        for (std::uint32_t m = 1; 2 * m <= p - 1; ++m) {
            if ((p - 1) % (2 * m) != 0 || !is_mth_residue(2, ctx, m)) continue;
            const auto num = verify_theorem_main_numeric(ctx, m, 1, 1e-6);
            const auto exact = verify_tan_cross(ctx, m, 1);
            ASSERT_EQ(num.status, Status::pass);
            ASSERT_EQ(exact.status, Status::pass);
            const auto value = tangent_product_value(ctx, m);
            ASSERT_EQ(tan_product(ctx, m, 1).sign, value.sign);
        }
    }
}

TEST(PmdLemmaTest, Examples) {
    for (double x : {0.1, 0.3, 0.77, -2.2}) {
        EXPECT_EQ(pmd_lemma_identity(1, x, 1e-12).status, Status::pass);
    }
    const auto r3 = pmd_lemma_identity(3, 0.1, 1e-9);
    EXPECT_EQ(r3.status, Status::pass);
    const auto lhs3 = SignedMagnitude{-1, std::log2(-kPmd3At01)};
    EXPECT_EQ(r3.actual, "lhs=" + lhs3.to_string());
    const auto r9 = pmd_lemma_identity(9, 0.2, 1e-9);
    EXPECT_EQ(r9.status, Status::pass);
    const auto lhs9 = SignedMagnitude{1, std::log2(kPmd9At02)};
    EXPECT_EQ(r9.actual, "lhs=" + lhs9.to_string());
}

TEST(PmdLemmaTest, ZeroCrossingComparedAbsolutely) {
    // x = 1/4 and n = 3 mod 4: both sides vanish.
    const auto r = pmd_lemma_identity(3, 0.25, 1e-9);
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_NE(r.expected.find("absolute"), std::string::npos);
    EXPECT_EQ(pmd_lemma_identity(99, 0.25, 1e-9).status, Status::pass);
    EXPECT_EQ(pmd_lemma_identity(97, 0.25, 1e-9).status, Status::pass);
}

TEST(PmdLemmaTest, Errors) {
    EXPECT_THROW(pmd_lemma_identity(3, 0.5, 1e-9), PoleProximityError);
    EXPECT_THROW(pmd_lemma_identity(3, 1.5, 1e-9), PoleProximityError);
    EXPECT_THROW(pmd_lemma_identity(4, 0.1, 1e-9), InvalidInputError);
}

TEST(PmdTheorem14Test, Examples) {
    const auto r17 = pmd_theorem14_numeric(PrimeContext(17), 1, 1e-6);
    EXPECT_EQ(r17.status, Status::pass);
    EXPECT_EQ(r17.expected, "-2^4.000000000000 rel_tol=1e-06");
    const auto r41 = pmd_theorem14_numeric(PrimeContext(41), 1, 1e-6);
    EXPECT_EQ(r41.status, Status::pass);
    EXPECT_EQ(r41.expected, "-2^10.000000000000 rel_tol=1e-06");
    EXPECT_EQ(pmd_theorem14_numeric(PrimeContext(41), 2, 1e-6).status, Status::pass);
    EXPECT_THROW(pmd_theorem14_numeric(PrimeContext(13), 1, 1e-6), BranchViolationError);
}

}  // namespace
}  // namespace resitan
