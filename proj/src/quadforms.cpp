#include "resitan/quadforms.hpp"

#include <algorithm>
#include <string>

#include "resitan/errors.hpp"
#include "resitan/residues.hpp"

namespace resitan {

std::optional<Representation> cornacchia(const PrimeContext& ctx, std::uint64_t d) {
    const std::uint64_t p = ctx.p();
    if (d == 0 || d >= p) throw InvalidInputError("cornacchia: need 0 < d < p");
    const auto root = sqrt_mod(p - d, ctx);
    if (!root) return std::nullopt;

    // Start the descent from the root above sqrt(p).
    std::uint64_t r = std::max(*root, p - *root);
    std::uint64_t a = p;
    std::uint64_t b = r;
    const std::uint64_t bound = isqrt(p);
    while (b > bound) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    const std::uint64_t x = b;
    const std::uint64_t rest = p - x * x;
    if (x == 0 || rest % d != 0) return std::nullopt;
    const std::uint64_t y2 = rest / d;
    const std::uint64_t y = isqrt(y2);
    if (y == 0 || y * y != y2) return std::nullopt;
    return Representation{p, d, x, y};
}

VerificationRecord check_lemma31(const PrimeContext& ctx) {
    return timed([&] {
        const auto rep = ctx.p() > 27 ? cornacchia(ctx, 27) : std::nullopt;
        if (!rep) throw NotRepresentableError("p is not of the form x^2 + 27y^2");
        const std::uint64_t xy = rep->x * rep->y;
        const bool opposite_parity = (rep->x % 2) != (rep->y % 2);
        // xy is even because x and y have opposite parity.
        const int sign_from_xy = ((xy / 2) % 2 == 0) ? 1 : -1;
        const int legendre = jacobi(-2, ctx.p());
        const bool four_divides = xy % 4 == 0;
        const std::uint64_t r8 = ctx.p() % 8;
        const bool p_mod8_ok = r8 == 1 || r8 == 3;

        VerificationRecord rec;
        rec.p = ctx.p();
        rec.m = 3;
        rec.a = 0;
        rec.check = Check::lemma31;
        rec.expected = "(-2/p)=" + std::to_string(sign_from_xy) + " 4|xy=" + (four_divides ? "1" : "0") +
                       " x!=y(mod 2)=1";
        rec.actual = "(-2/p)=" + std::to_string(legendre) + " p=1,3(mod 8)=" + (p_mod8_ok ? "1" : "0") +
                     " x!=y(mod 2)=" + (opposite_parity ? "1" : "0");
        const bool holds = legendre == sign_from_xy && four_divides == p_mod8_ok && opposite_parity;
        rec.status = holds ? Status::pass : Status::fail;
        return rec;
    });
}

VerificationRecord two_residue_criterion(const PrimeContext& ctx, std::uint32_t m) {
    return timed([&] {
        if (m != 3 && m != 4) throw InvalidInputError("two_residue_criterion: m must be 3 or 4");
        if (ctx.p() % m != 1) {
            throw HypothesisError("p must be 1 mod " + std::to_string(m));
        }
        const std::uint64_t d = (m == 3) ? 27 : 64;
        const bool residue = is_mth_residue(2, ctx, m);
        const bool representable = ctx.p() > d && cornacchia(ctx, d).has_value();

        VerificationRecord rec;
        rec.p = ctx.p();
        rec.m = m;
        rec.a = 0;
        rec.check = Check::criterion;
        rec.expected = std::string("2 in R_m(p)=") + (residue ? "1" : "0");
        rec.actual = "p=x^2+" + std::to_string(d) + "y^2 " + (representable ? "1" : "0");
        rec.status = residue == representable ? Status::pass : Status::fail;
        return rec;
    });
}

}  // namespace resitan
