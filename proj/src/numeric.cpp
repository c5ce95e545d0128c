#include "resitan/numeric.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "resitan/errors.hpp"
#include "resitan/residues.hpp"

namespace resitan {

namespace {

constexpr double kPoleTol = 1e-9;
constexpr double kZeroArgTol = 1e-12;
constexpr double kWarnFactor = 1e-12;

std::string fmt_double(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string tol_suffix(double rel_tol) { return " rel_tol=" + fmt_double("%.3g", rel_tol); }

// Reduce into [-1/2, 1/2).
double reduce_unit(double u) { return u - std::floor(u + 0.5); }

bool within_log_tol(const SignedMagnitude& got, const SignedMagnitude& want, double rel_tol) {
    if (got.sign != want.sign) return false;
    if (got.sign == 0) return true;
    return std::abs(got.log2_mag - want.log2_mag) <= std::log2(1.0 + rel_tol);
}

SignedMagnitude signed_pow2(int sign, double exponent) { return {sign, exponent}; }

VerificationRecord make_record(std::uint64_t p, std::uint32_t m, std::int64_t a, Check check) {
    VerificationRecord rec;
    rec.p = p;
    rec.m = m;
    rec.a = a;
    rec.check = check;
    return rec;
}

}  // namespace

SignedMagnitude SignedMagnitude::from_double(double v) {
    if (v == 0.0) return {0, 0.0};
    return {v < 0 ? -1 : 1, std::log2(std::abs(v))};
}

double SignedMagnitude::value() const { return sign == 0 ? 0.0 : sign * std::exp2(log2_mag); }

SignedMagnitude& SignedMagnitude::operator*=(const SignedMagnitude& o) {
    sign *= o.sign;
    log2_mag = sign == 0 ? 0.0 : log2_mag + o.log2_mag;
    return *this;
}

std::string SignedMagnitude::to_string() const {
    if (sign == 0) return "0";
    return (sign > 0 ? "+2^" : "-2^") + fmt_double("%.12f", log2_mag);
}

SignedMagnitude one_plus_tan(double u) {
    u = reduce_unit(u);
    if (std::abs(std::abs(u) - 0.5) < kPoleTol) throw PoleProximityError("tangent argument is at a pole");
    if (std::abs(u + 0.25) < kZeroArgTol) return {0, 0.0};
    // 1 + tan t = sqrt(2) sin(t + pi/4) / cos t, and cos t > 0 on (-pi/2, pi/2).
    const double s = std::sin(std::numbers::pi * (u + 0.25));
    const double c = std::cos(std::numbers::pi * u);
    return {s < 0 ? -1 : 1, 0.5 + std::log2(std::abs(s)) - std::log2(c)};
}

SignedMagnitude one_plus_tan_ratio(std::uint64_t r, std::uint64_t p) {
    r %= p;
    // Signed representative in (-p/2, p/2); p is odd so r/p never hits 1/2.
    const double sr = 2 * r > p ? -static_cast<double>(p - r) : static_cast<double>(r);
    const double pd = static_cast<double>(p);
    const double s = std::sin(std::numbers::pi * (4.0 * sr + pd) / (4.0 * pd));
    const double c = std::cos(std::numbers::pi * sr / pd);
    assert(s != 0.0);
    return {s < 0 ? -1 : 1, 0.5 + std::log2(std::abs(s)) - std::log2(c)};
}

TanProduct tan_product_detailed(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    const std::uint64_t am = ctx.reduce(a);
    if (am == 0) throw InvalidInputError("a must not be divisible by p");
    const ResidueSet set = residue_set(ctx, m);
    TanProduct out{{1, 0.0}, std::numeric_limits<double>::infinity()};
    for (auto k : set.members) {
        const SignedMagnitude f = one_plus_tan_ratio(mul_mod(am, k, ctx.p()), ctx.p());
        out.min_abs_factor = std::min(out.min_abs_factor, std::exp2(f.log2_mag));
        out.value *= f;
    }
    return out;
}

SignedMagnitude tan_product(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    return tan_product_detailed(ctx, m, a).value;
}

VerificationRecord verify_theorem_main_numeric(const PrimeContext& ctx, std::uint32_t m, std::int64_t a,
                                               double rel_tol) {
    return timed([&] {
        if (ctx.reduce(a) == 0) throw InvalidInputError("a must not be divisible by p");
        const SignedPowerOfTwo target = tangent_product_value(ctx, m);
        const TanProduct got = tan_product_detailed(ctx, m, a);
        const SignedMagnitude want = signed_pow2(target.sign, static_cast<double>(target.exponent));

        auto rec = make_record(ctx.p(), m, a, Check::thm_main_numeric);
        rec.expected = want.to_string() + tol_suffix(rel_tol);
        rec.actual = got.value.to_string();
        if (got.min_abs_factor < kWarnFactor) rec.actual += " precision-warning";
        rec.status = within_log_tol(got.value, want, rel_tol) ? Status::pass : Status::fail;
        return rec;
    });
}

VerificationRecord pmd_lemma_identity(std::uint32_t n, double x, double rel_tol) {
    return timed([&] {
        if (n % 2 == 0) throw InvalidInputError("pmd_lemma_identity: n must be odd and positive");
        SignedMagnitude lhs{1, 0.0};
        for (std::uint32_t r = 0; r < n; ++r) lhs *= one_plus_tan((x + r) / n);

        const int chi_minus1 = jacobi(-1, n);
        const int chi_2 = jacobi(2, n);
        // 1 + s tan(pi x) = 1 + tan(pi s x) since tan is odd.
        SignedMagnitude rhs = one_plus_tan(chi_minus1 * reduce_unit(x));
        rhs *= signed_pow2(chi_2, (n - 1) / 2.0);

        auto rec = make_record(n, 0, 0, Check::pmd_lemma);
        rec.expected = "rhs=" + rhs.to_string() + " x=" + fmt_double("%.17g", x) + tol_suffix(rel_tol);
        rec.actual = "lhs=" + lhs.to_string();
        bool ok;
        if (rhs.sign == 0 || std::abs(rhs.value()) < 1e-9) {
            rec.expected += " absolute";
            ok = std::abs(lhs.value() - rhs.value()) <= rel_tol;
        } else {
            ok = within_log_tol(lhs, rhs, rel_tol);
        }
        rec.status = ok ? Status::pass : Status::fail;
        return rec;
    });
}

VerificationRecord pmd_theorem14_numeric(const PrimeContext& ctx, std::int64_t a, double rel_tol) {
    return timed([&] {
        const std::uint64_t p = ctx.p();
        if (p % 8 != 1) throw BranchViolationError("only the p = 1 (mod 8) branch is implemented");
        const std::uint64_t am = ctx.reduce(a);
        if (am == 0) throw InvalidInputError("a must not be divisible by p");

        SignedMagnitude lhs{1, 0.0};
        for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) {
            lhs *= one_plus_tan_ratio(mul_mod(am, mul_mod(k, k, p), p), p);
        }
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; 4 * k < p; ++k) {
            if (jacobi(static_cast<std::int64_t>(k), p) == 1) ++count;
        }
        const SignedMagnitude want = signed_pow2(count % 2 == 0 ? 1 : -1, static_cast<double>((p - 1) / 4));

        auto rec = make_record(p, 2, a, Check::pmd_thm14);
        rec.expected = want.to_string() + tol_suffix(rel_tol);
        rec.actual = lhs.to_string();
        rec.status = within_log_tol(lhs, want, rel_tol) ? Status::pass : Status::fail;
        return rec;
    });
}

}  // namespace resitan
