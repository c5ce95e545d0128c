#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resitan/arith.hpp"

namespace resitan {

/// R_m(p): the m-th power residues in [1, p - 1], sorted. Requires 2m | p - 1.
struct ResidueSet {
    std::uint64_t p = 0;
    std::uint32_t m = 0;
    std::vector<std::uint64_t> members;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(std::uint64_t k) const;
    std::uint64_t sum() const;
};

/// True iff k^((p-1)/m) = 1 mod p. Throws HypothesisError when m does not
/// divide p - 1 or when k = 0 mod p.
bool is_mth_residue(std::int64_t k, const PrimeContext& ctx, std::uint32_t m);

/// Builds R_m(p) as the powers of g^m for the primitive root g.
ResidueSet residue_set(const PrimeContext& ctx, std::uint32_t m);

/// Same set via the membership exponent test over k = 1..p-1.
ResidueSet residue_set_by_exponent(const PrimeContext& ctx, std::uint32_t m);

struct ResidueSumCheck {
    bool holds = false;
    std::uint64_t sum = 0;
    std::uint64_t expected = 0;  // p(p-1)/(2m)
};

ResidueSumCheck residue_sum_check(const PrimeContext& ctx, std::uint32_t m);

/// The +-1 valued power residue symbol (a/p)_{2m}.
struct SignSymbol {
    int value = 1;
    std::int64_t a = 0;
    std::uint64_t p = 0;
    std::uint32_t order = 0;  // 2m
};

/// Sign delta with a^((p-1)/(2m)) = delta mod p. Throws HypothesisError when
/// 2m does not divide p - 1 or a = 0 mod p, and NonRealSymbolError when the
/// power is neither 1 nor p - 1.
SignSymbol symbol_sign(std::int64_t a, const PrimeContext& ctx, std::uint32_t m);

/// sign * 2^exponent, exactly.
struct SignedPowerOfTwo {
    int sign = 1;
    std::uint64_t exponent = 0;

    std::string to_string() const;  // decimal
    friend bool operator==(const SignedPowerOfTwo&, const SignedPowerOfTwo&) = default;
};

/// The closed-form value (-2/p)_{2m} * (-2)^((p-1)/(2m)) of the tangent
/// product over R_m(p). Throws HypothesisError unless 2m | p - 1 and 2 is an
/// m-th power residue.
SignedPowerOfTwo tangent_product_value(const PrimeContext& ctx, std::uint32_t m);

/// Throws HypothesisError unless m >= 1 and 2m | p - 1.
void require_even_index(const PrimeContext& ctx, std::uint32_t m);

/// Throws HypothesisError unless 2m | p - 1 and 2 is in R_m(p).
void require_two_is_residue(const PrimeContext& ctx, std::uint32_t m);

}  // namespace resitan
