#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "resitan/arith.hpp"
#include "resitan/record.hpp"

namespace resitan {

using Integer = mpz_class;

inline constexpr std::uint32_t kDefaultCycloBound = 4 * 5000;

/// Coefficients (constant term first) of the n-th cyclotomic polynomial,
/// from the Moebius product over the divisors of n. Throws
/// BoundExceededError for n > bound and InvalidInputError for n = 0.
std::vector<Integer> cyclotomic_poly(std::uint32_t n, std::uint32_t bound = kDefaultCycloBound);

/// Remainder of `num` modulo the monic polynomial `divisor` (both constant
/// term first). The result has length deg(divisor).
std::vector<Integer> poly_rem_monic(std::vector<Integer> num, const std::vector<Integer>& divisor);

/// Z[zeta_n] described by n, phi(n) and Phi_n.
class CycloRing {
public:
    static std::shared_ptr<const CycloRing> make(std::uint32_t n, std::uint32_t bound = kDefaultCycloBound);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t phi() const noexcept { return phi_; }
    const std::vector<Integer>& cyclo_poly() const noexcept { return poly_; }

    /// Canonical reduction of an arbitrary coefficient vector: fold exponents
    /// modulo n, then take the remainder modulo Phi_n.
    std::vector<Integer> canonical(std::vector<Integer> coeffs) const;

private:
    explicit CycloRing(std::uint32_t n, std::uint32_t bound);

    std::uint32_t n_;
    std::uint32_t phi_;
    std::vector<Integer> poly_;
    // Nonzero lower terms of Phi_n as (exponent, coefficient).
    std::vector<std::pair<std::uint32_t, long>> tail_;
};

using RingPtr = std::shared_ptr<const CycloRing>;

/// An element of Z[zeta_n] in the exponent basis zeta_n^j. Coefficient
/// vectors may be raw (any length); comparisons go through canonical form.
class CycloElement {
public:
    CycloElement(RingPtr ring, std::vector<Integer> coeffs);

    static CycloElement zero(RingPtr ring);
    static CycloElement one(RingPtr ring);
    /// c * zeta^e.
    static CycloElement monomial(RingPtr ring, const Integer& c, std::uint64_t e);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_canonical() const noexcept;

    /// Value at zeta_n = exp(2 pi i / n) in double precision.
    std::complex<double> embed() const;

    /// Canonical form as "c*z^e" terms in decreasing exponent order joined by
    /// " + ", or "0".
    std::string to_string() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const Integer& s, const CycloElement& b);
    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    RingPtr ring_;
    std::vector<Integer> coeffs_;
};

CycloElement reduce(const CycloElement& e);

/// Canonical product; throws RingMismatchError for different rings.
CycloElement mul(const CycloElement& a, const CycloElement& b);

/// Sparse two-term factor sign1 * x^exp1 + sign2 * x^exp2.
struct BinomialFactor {
    int sign1 = 1;
    std::uint32_t exp1 = 0;
    int sign2 = 1;
    std::uint32_t exp2 = 0;
};

/// Exact product of binomial factors, folded modulo x^n - 1 after each step
/// and canonically reduced at the end.
CycloElement binomial_product(const RingPtr& ring, std::span<const BinomialFactor> factors);

/// Factors (i -/+ zeta_p^{ak}) for k in R_m(p), in the ring n = 4p where
/// i = zeta^p and zeta_p^{ak} = zeta^{4ak mod 4p}. `sign` is -1 for
/// (i - ...) and +1 for (i + ...).
std::vector<BinomialFactor> residue_factors(const PrimeContext& ctx, std::uint32_t m, std::int64_t a, int sign);

/// prod_{k in R_m(p)} (i - e^{2 pi i a k / p}) compared with
/// (-2/p)_{2m} i^{(p-1)/(2m)} in Z[zeta_{4p}].
VerificationRecord verify_gi(const PrimeContext& ctx, std::uint32_t m, std::int64_t a);

/// prod_{k in R_m(p)} (i + e^{2 pi i a k / p}) compared with
/// (2/p)_{2m} i^{(p-1)/(2m)}.
VerificationRecord verify_gi_plus(const PrimeContext& ctx, std::uint32_t m, std::int64_t a);

/// The tangent product identity in cross-multiplied form:
///   (i - 1)^{|R_m(p)|} == delta (-2)^{(p-1)/(2m)} prod_{k} (i - zeta_p^{ak})
/// which needs no transcendental evaluation since
/// 1 + tan(pi k / p) = (i - 1) / (i - e^{2 pi i k / p}).
VerificationRecord verify_tan_cross(const PrimeContext& ctx, std::uint32_t m, std::int64_t a);

}  // namespace resitan
