#pragma once

#include <cstdint>
#include <optional>

#include "resitan/arith.hpp"
#include "resitan/record.hpp"

namespace resitan {

/// p = x^2 + d y^2 with x, y > 0.
struct Representation {
    std::uint64_t p = 0;
    std::uint64_t d = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Cornacchia's algorithm. Requires 0 < d < p; returns nullopt when p has no
/// representation x^2 + d y^2 in positive integers.
std::optional<Representation> cornacchia(const PrimeContext& ctx, std::uint64_t d);

/// For p = x^2 + 27 y^2: (-2/p) = (-1)^{xy/2}, and 4 | xy iff p = 1, 3 mod 8.
/// Throws NotRepresentableError when p has no such representation.
VerificationRecord check_lemma31(const PrimeContext& ctx);

/// For m in {3, 4}: 2 is an m-th power residue mod p iff p = x^2 + 27 y^2
/// (m = 3) or p = x^2 + 64 y^2 (m = 4). Throws HypothesisError unless
/// p = 1 mod 3 (m = 3) or p = 1 mod 4 (m = 4).
VerificationRecord two_residue_criterion(const PrimeContext& ctx, std::uint32_t m);

}  // namespace resitan
