#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace resitan {

/// Deterministic primality test valid on the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// (a * b) mod m without overflow.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// b^e mod m; b is reduced into [0, m) first, so negative bases are fine.
std::uint64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_pow_u(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Least nonnegative residue of a modulo m.
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(std::int64_t a, std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// An odd prime p together with the factorization of p - 1.
class PrimeContext {
public:
    /// Throws InvalidInputError unless p is an odd prime.
    explicit PrimeContext(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t p_minus_1() const noexcept { return p_ - 1; }
    const std::vector<std::uint64_t>& p_minus_1_factors() const noexcept { return factors_; }

    /// Smallest primitive root modulo p.
    std::uint64_t primitive_root() const noexcept { return generator_; }

    /// Least nonnegative residue of a modulo p.
    std::uint64_t reduce(std::int64_t a) const noexcept { return mod_reduce(a, p_); }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> factors_;
    std::uint64_t generator_ = 0;
};

/// Square root of a modulo p (Tonelli-Shanks). Returns min(r, p - r), 0 for
/// a = 0, and nullopt for a quadratic non-residue. Requires 0 <= a < p.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, const PrimeContext& ctx);

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

/// All primes in [lo, hi], increasing.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace resitan
