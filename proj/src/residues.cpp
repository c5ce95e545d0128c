#include "resitan/residues.hpp"

#include <algorithm>
#include <limits>

#include <gmpxx.h>

#include "resitan/errors.hpp"

namespace resitan {

namespace {

void require_index(const PrimeContext& ctx, std::uint32_t m, std::uint64_t divisor, const char* what) {
    if (m == 0) throw InvalidInputError("m must be positive");
    if (ctx.p_minus_1() % divisor != 0) {
        throw HypothesisError(std::string(what) + " does not divide p-1 (p=" + std::to_string(ctx.p()) +
                              ", m=" + std::to_string(m) + ")");
    }
}

void require_small(const PrimeContext& ctx) {
    if (ctx.p() > std::numeric_limits<std::uint32_t>::max()) {
        throw InvalidInputError("residue sets are only materialized for p < 2^32");
    }
}

}  // namespace

void require_even_index(const PrimeContext& ctx, std::uint32_t m) {
    require_index(ctx, m, 2ULL * m, "2m");
}

void require_two_is_residue(const PrimeContext& ctx, std::uint32_t m) {
    require_even_index(ctx, m);
    if (!is_mth_residue(2, ctx, m)) {
        throw HypothesisError("2 is not an m-th power residue (p=" + std::to_string(ctx.p()) +
                              ", m=" + std::to_string(m) + ")");
    }
}

bool ResidueSet::contains(std::uint64_t k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

std::uint64_t ResidueSet::sum() const {
    std::uint64_t s = 0;
    for (auto k : members) s += k;
    return s;
}

bool is_mth_residue(std::int64_t k, const PrimeContext& ctx, std::uint32_t m) {
    require_index(ctx, m, m, "m");
    const std::uint64_t r = ctx.reduce(k);
    if (r == 0) throw HypothesisError("k = 0 mod p has no power residue character");
    return mod_pow_u(r, ctx.p_minus_1() / m, ctx.p()) == 1;
}

ResidueSet residue_set(const PrimeContext& ctx, std::uint32_t m) {
    require_even_index(ctx, m);
    require_small(ctx);
    const std::uint64_t p = ctx.p();
    const std::uint64_t h = mod_pow_u(ctx.primitive_root(), m, p);
    ResidueSet out{p, m, {}};
    const std::uint64_t count = ctx.p_minus_1() / m;
    out.members.reserve(count);
    std::uint64_t x = 1;
    for (std::uint64_t j = 0; j < count; ++j) {
        out.members.push_back(x);
        x = mul_mod(x, h, p);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

ResidueSet residue_set_by_exponent(const PrimeContext& ctx, std::uint32_t m) {
    require_even_index(ctx, m);
    require_small(ctx);
    ResidueSet out{ctx.p(), m, {}};
    const std::uint64_t e = ctx.p_minus_1() / m;
    for (std::uint64_t k = 1; k < ctx.p(); ++k) {
        if (mod_pow_u(k, e, ctx.p()) == 1) out.members.push_back(k);
    }
    return out;
}

ResidueSumCheck residue_sum_check(const PrimeContext& ctx, std::uint32_t m) {
    const ResidueSet set = residue_set(ctx, m);
    ResidueSumCheck out;
    out.sum = set.sum();
    out.expected = ctx.p() * ctx.p_minus_1() / (2ULL * m);
    out.holds = out.sum == out.expected;
    return out;
}

SignSymbol symbol_sign(std::int64_t a, const PrimeContext& ctx, std::uint32_t m) {
    require_even_index(ctx, m);
    const std::uint64_t r = ctx.reduce(a);
    if (r == 0) throw HypothesisError("symbol undefined for a = 0 mod p");
    const std::uint64_t v = mod_pow_u(r, ctx.p_minus_1() / (2ULL * m), ctx.p());
    SignSymbol out{0, a, ctx.p(), 2 * m};
    if (v == 1) {
        out.value = 1;
    } else if (v == ctx.p() - 1) {
        out.value = -1;
    } else {
        throw NonRealSymbolError("non-real symbol: a^((p-1)/(2m)) = " + std::to_string(v) + " mod " +
                                 std::to_string(ctx.p()));
    }
    return out;
}

std::string SignedPowerOfTwo::to_string() const {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
    if (sign < 0) v = -v;
    return v.get_str();
}

SignedPowerOfTwo tangent_product_value(const PrimeContext& ctx, std::uint32_t m) {
    require_two_is_residue(ctx, m);
    const std::uint64_t e = ctx.p_minus_1() / (2ULL * m);
    const int delta = symbol_sign(-2, ctx, m).value;
    return {(e % 2 == 0) ? delta : -delta, e};
}

}  // namespace resitan
