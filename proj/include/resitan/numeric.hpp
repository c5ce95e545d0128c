#pragma once

#include <cstdint>
#include <string>

#include "resitan/arith.hpp"
#include "resitan/record.hpp"

namespace resitan {

inline constexpr double kDefaultRelTol = 1e-6;

/// sign * 2^log2_mag; log2_mag is meaningless when sign == 0.
struct SignedMagnitude {
    int sign = 1;
    double log2_mag = 0.0;

    static SignedMagnitude from_double(double v);
    double value() const;

    SignedMagnitude& operator*=(const SignedMagnitude& o);
    friend SignedMagnitude operator*(SignedMagnitude a, const SignedMagnitude& b) { return a *= b; }

    /// "+2^5.000000000000", "-2^...", or "0".
    std::string to_string() const;
};

/// 1 + tan(pi * u) with u reduced modulo 1 first. A factor within 1e-12 of
/// u = -1/4 (mod 1) is reported as exactly zero.
SignedMagnitude one_plus_tan(double u);

/// 1 + tan(pi * r / p) for integers, exact argument reduction.
SignedMagnitude one_plus_tan_ratio(std::uint64_t r, std::uint64_t p);

struct TanProduct {
    SignedMagnitude value;
    double min_abs_factor = 0.0;  // smallest |1 + tan| seen
};

/// prod_{k in R_m(p)} (1 + tan(pi a k / p)) in sign/log form.
/// Throws HypothesisError unless 2m | p - 1.
SignedMagnitude tan_product(const PrimeContext& ctx, std::uint32_t m, std::int64_t a);
TanProduct tan_product_detailed(const PrimeContext& ctx, std::uint32_t m, std::int64_t a);

/// Compares tan_product with (-2/p)_{2m} (-2)^{(p-1)/(2m)}: exact sign,
/// |delta log2| <= log2(1 + rel_tol).
VerificationRecord verify_theorem_main_numeric(const PrimeContext& ctx, std::uint32_t m, std::int64_t a,
                                               double rel_tol = kDefaultRelTol);

/// prod_{r=0}^{n-1} (1 + tan pi (x + r) / n) = (2/n) 2^{(n-1)/2} (1 + (-1/n) tan pi x)
/// for odd n. Throws PoleProximityError when an argument is within 1e-9 of a
/// pole. When the right side vanishes (|rhs| < 1e-9) the comparison is
/// absolute.
VerificationRecord pmd_lemma_identity(std::uint32_t n, double x, double rel_tol);

/// prod_{k=1}^{(p-1)/2} (1 + tan(pi a k^2 / p)) against
/// (-1)^{#{1 <= k < p/4 : (k/p) = 1}} 2^{(p-1)/4}, p = 1 mod 8 only
/// (BranchViolationError otherwise).
VerificationRecord pmd_theorem14_numeric(const PrimeContext& ctx, std::int64_t a, double rel_tol);

}  // namespace resitan
