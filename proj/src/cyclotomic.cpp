#include "resitan/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resitan/errors.hpp"
#include "resitan/residues.hpp"

namespace resitan {

namespace {

using Poly = std::vector<Integer>;

int moebius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// p * (x^d - 1)
Poly times_binomial(const Poly& p, std::uint32_t d) {
    Poly out(p.size() + d);
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j + d] += p[j];
        out[j] -= p[j];
    }
    return out;
}

// p / (x^d - 1); the division must be exact.
Poly divide_binomial(Poly r, std::uint32_t d) {
    const std::size_t deg = r.size() - 1;
    Poly q(deg - d + 1);
    for (std::size_t j = deg; j >= d; --j) {
        if (sgn(r[j]) != 0) {
            q[j - d] = r[j];
            r[j - d] += r[j];
            r[j] = 0;
        }
    }
    for (const auto& c : r) {
        if (sgn(c) != 0) throw std::logic_error("cyclotomic_poly: inexact division");
    }
    return q;
}

void trim(Poly& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

// target -= t * c
inline void submul(Integer& target, const Integer& t, long c) {
    if (c > 0) {
        mpz_submul_ui(target.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(c));
    } else {
        mpz_addmul_ui(target.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(-c));
    }
}

void check_same_ring(const CycloElement& a, const CycloElement& b) {
    if (a.ring()->n() != b.ring()->n()) {
        throw RingMismatchError("ring mismatch: n=" + std::to_string(a.ring()->n()) +
                                " vs n=" + std::to_string(b.ring()->n()));
    }
}

}  // namespace

std::vector<Integer> cyclotomic_poly(std::uint32_t n, std::uint32_t bound) {
    if (n == 0) throw InvalidInputError("cyclotomic_poly: n must be positive");
    if (n > bound) {
        throw BoundExceededError("cyclotomic_poly: n=" + std::to_string(n) + " exceeds bound " +
                                 std::to_string(bound));
    }
    std::vector<std::uint32_t> up, down;
    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = moebius(n / d);
        if (mu == 1) up.push_back(d);
        if (mu == -1) down.push_back(d);
    }
    Poly acc{Integer(1)};
    for (auto d : up) acc = times_binomial(acc, d);
    for (auto d : down) acc = divide_binomial(std::move(acc), d);
    trim(acc);
    return acc;
}

std::vector<Integer> poly_rem_monic(std::vector<Integer> num, const std::vector<Integer>& divisor) {
    if (divisor.empty() || divisor.back() != 1) {
        throw InvalidInputError("poly_rem_monic: divisor must be monic");
    }
    const std::size_t deg = divisor.size() - 1;
    std::vector<std::pair<std::size_t, const Integer*>> tail;
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(divisor[i]) != 0) tail.emplace_back(i, &divisor[i]);
    }
    for (std::size_t j = num.size(); j-- > deg;) {
        if (sgn(num[j]) == 0) continue;
        const Integer t = num[j];
        for (const auto& [i, c] : tail) num[j - deg + i] -= t * *c;
        num[j] = 0;
    }
    num.resize(deg);
    return num;
}

CycloRing::CycloRing(std::uint32_t n, std::uint32_t bound) : n_(n), poly_(cyclotomic_poly(n, bound)) {
    phi_ = static_cast<std::uint32_t>(poly_.size() - 1);
    for (std::uint32_t i = 0; i < phi_; ++i) {
        if (sgn(poly_[i]) == 0) continue;
        if (!poly_[i].fits_slong_p()) throw BoundExceededError("Phi_n coefficient exceeds machine word");
        tail_.emplace_back(i, poly_[i].get_si());
    }
}

std::shared_ptr<const CycloRing> CycloRing::make(std::uint32_t n, std::uint32_t bound) {
    return std::shared_ptr<const CycloRing>(new CycloRing(n, bound));
}

std::vector<Integer> CycloRing::canonical(std::vector<Integer> coeffs) const {
    // zeta^n = 1
    if (coeffs.size() > n_) {
        for (std::size_t j = n_; j < coeffs.size(); ++j) coeffs[j % n_] += coeffs[j];
    }
    coeffs.resize(n_);
    // zeta^{n/2} = -1 for even n, and Phi_n divides x^{n/2} + 1, so this
    // fold leaves the remainder modulo Phi_n unchanged.
    std::size_t len = n_;
    if (n_ % 2 == 0) {
        const std::size_t half = n_ / 2;
        for (std::size_t j = half; j < n_; ++j) coeffs[j - half] -= coeffs[j];
        len = half;
        coeffs.resize(len);
    }
    for (std::size_t j = len; j-- > phi_;) {
        if (sgn(coeffs[j]) == 0) continue;
        const Integer t = coeffs[j];
        for (const auto& [i, c] : tail_) submul(coeffs[j - phi_ + i], t, c);
        coeffs[j] = 0;
    }
    coeffs.resize(phi_);
    return coeffs;
}

CycloElement::CycloElement(RingPtr ring, std::vector<Integer> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (!ring_) throw InvalidInputError("CycloElement: null ring");
}

CycloElement CycloElement::zero(RingPtr ring) { return CycloElement(std::move(ring), {}); }

CycloElement CycloElement::one(RingPtr ring) { return monomial(std::move(ring), Integer(1), 0); }

CycloElement CycloElement::monomial(RingPtr ring, const Integer& c, std::uint64_t e) {
    const std::uint32_t n = ring->n();
    std::vector<Integer> v(n);
    v[e % n] = c;
    auto canon = ring->canonical(std::move(v));
    return CycloElement(std::move(ring), std::move(canon));
}

bool CycloElement::is_canonical() const noexcept { return coeffs_.size() <= ring_->phi(); }

std::complex<double> CycloElement::embed() const {
    std::complex<double> acc{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / ring_->n();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        const double ang = step * static_cast<double>(j % ring_->n());
        acc += coeffs_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycloElement::to_string() const {
    const auto canon = is_canonical() ? coeffs_ : ring_->canonical(coeffs_);
    std::string out;
    for (std::size_t j = canon.size(); j-- > 0;) {
        if (sgn(canon[j]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += canon[j].get_str();
        out += "*z^";
        out += std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

CycloElement CycloElement::operator-() const {
    auto v = coeffs_;
    for (auto& c : v) c = -c;
    return CycloElement(ring_, std::move(v));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    check_same_ring(a, b);
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) v[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[j] += b.coeffs_[j];
    return CycloElement(a.ring_, a.ring_->canonical(std::move(v)));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) { return mul(a, b); }

CycloElement operator*(const Integer& s, const CycloElement& b) {
    auto v = b.ring_->canonical(b.coeffs_);
    for (auto& c : v) c *= s;
    return CycloElement(b.ring_, std::move(v));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    if (a.ring_->n() != b.ring_->n()) return false;
    const auto ca = a.is_canonical() ? a.coeffs_ : a.ring_->canonical(a.coeffs_);
    const auto cb = b.is_canonical() ? b.coeffs_ : b.ring_->canonical(b.coeffs_);
    const std::size_t len = std::max(ca.size(), cb.size());
    for (std::size_t j = 0; j < len; ++j) {
        const int sa = j < ca.size() ? sgn(ca[j]) : 0;
        const int sb = j < cb.size() ? sgn(cb[j]) : 0;
        if (sa == 0 && sb == 0) continue;
        if (sa != sb || ca[j] != cb[j]) return false;
    }
    return true;
}

CycloElement reduce(const CycloElement& e) {
    return CycloElement(e.ring(), e.ring()->canonical(e.coeffs()));
}

CycloElement mul(const CycloElement& a, const CycloElement& b) {
    check_same_ring(a, b);
    const auto& ring = a.ring();
    const auto ca = ring->canonical(a.coeffs());
    const auto cb = ring->canonical(b.coeffs());
    std::vector<Integer> prod(ca.size() + cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (sgn(ca[i]) == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            mpz_addmul(prod[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
        }
    }
    return CycloElement(ring, ring->canonical(std::move(prod)));
}

CycloElement binomial_product(const RingPtr& ring, std::span<const BinomialFactor> factors) {
    const std::uint32_t n = ring->n();
    std::vector<Integer> cur(n), next(n);
    cur[0] = 1;
    for (const auto& f : factors) {
        if (f.exp1 >= n || f.exp2 >= n) throw InvalidInputError("binomial_product: exponent out of range");
        if (std::abs(f.sign1) != 1 || std::abs(f.sign2) != 1) {
            throw InvalidInputError("binomial_product: signs must be +-1");
        }
        for (std::uint32_t j = 0; j < n; ++j) {
            const std::uint32_t i1 = j >= f.exp1 ? j - f.exp1 : j + n - f.exp1;
            const std::uint32_t i2 = j >= f.exp2 ? j - f.exp2 : j + n - f.exp2;
            mpz_ptr out = next[j].get_mpz_t();
            mpz_srcptr u = cur[i1].get_mpz_t();
            mpz_srcptr v = cur[i2].get_mpz_t();
            if (f.sign1 > 0 && f.sign2 > 0) {
                mpz_add(out, u, v);
            } else if (f.sign1 > 0) {
                mpz_sub(out, u, v);
            } else if (f.sign2 > 0) {
                mpz_sub(out, v, u);
            } else {
                mpz_add(out, u, v);
                mpz_neg(out, out);
            }
        }
        std::swap(cur, next);
    }
    return CycloElement(ring, ring->canonical(std::move(cur)));
}

std::vector<BinomialFactor> residue_factors(const PrimeContext& ctx, std::uint32_t m, std::int64_t a, int sign) {
    const std::uint64_t p = ctx.p();
    if (4 * p > UINT32_MAX) throw BoundExceededError("ring order 4p exceeds 32 bits");
    const std::uint64_t am = ctx.reduce(a);
    const ResidueSet set = residue_set(ctx, m);
    std::vector<BinomialFactor> out;
    out.reserve(set.size());
    for (auto k : set.members) {
        const auto e = static_cast<std::uint32_t>(4 * mul_mod(am, k, p));
        out.push_back({1, static_cast<std::uint32_t>(p), sign, e});
    }
    return out;
}

namespace {

struct GaussSetup {
    RingPtr ring;
    std::uint64_t half_exponent;  // (p-1)/(2m)
};

GaussSetup prepare(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    if (ctx.reduce(a) == 0) throw InvalidInputError("a must not be divisible by p");
    require_two_is_residue(ctx, m);
    if (4 * ctx.p() > kDefaultCycloBound) {
        throw BoundExceededError("4p exceeds the cyclotomic bound " + std::to_string(kDefaultCycloBound));
    }
    return {CycloRing::make(static_cast<std::uint32_t>(4 * ctx.p())), ctx.p_minus_1() / (2ULL * m)};
}

VerificationRecord gauss_record(const PrimeContext& ctx, std::uint32_t m, std::int64_t a, int sign, Check check) {
    const auto setup = prepare(ctx, m, a);
    const auto factors = residue_factors(ctx, m, a, sign);
    const CycloElement lhs = binomial_product(setup.ring, factors);
    const int delta = symbol_sign(sign < 0 ? -2 : 2, ctx, m).value;
    const CycloElement rhs =
        CycloElement::monomial(setup.ring, Integer(delta), ctx.p() * (setup.half_exponent % 4));
    VerificationRecord rec;
    rec.p = ctx.p();
    rec.m = m;
    rec.a = a;
    rec.check = check;
    rec.expected = rhs.to_string();
    rec.actual = lhs.to_string();
    rec.status = (lhs == rhs) ? Status::pass : Status::fail;
    return rec;
}

}  // namespace

VerificationRecord verify_gi(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    return timed([&] { return gauss_record(ctx, m, a, -1, Check::gi); });
}

VerificationRecord verify_gi_plus(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    return timed([&] { return gauss_record(ctx, m, a, +1, Check::gi_plus); });
}

VerificationRecord verify_tan_cross(const PrimeContext& ctx, std::uint32_t m, std::int64_t a) {
    return timed([&] {
        const auto setup = prepare(ctx, m, a);
        const auto factors = residue_factors(ctx, m, a, -1);
        const CycloElement gauss = binomial_product(setup.ring, factors);

        // (i - 1)^{|R_m(p)|}
        const std::vector<BinomialFactor> i_minus_one(
            factors.size(), BinomialFactor{1, static_cast<std::uint32_t>(ctx.p()), -1, 0});
        const CycloElement lhs = binomial_product(setup.ring, i_minus_one);

        const SignedPowerOfTwo value = tangent_product_value(ctx, m);
        Integer scalar;
        mpz_ui_pow_ui(scalar.get_mpz_t(), 2, value.exponent);
        if (value.sign < 0) scalar = -scalar;
        const CycloElement rhs = scalar * gauss;

        VerificationRecord rec;
        rec.p = ctx.p();
        rec.m = m;
        rec.a = a;
        rec.check = Check::thm_main_exact;
        rec.expected = lhs.to_string();
        rec.actual = rhs.to_string();
        rec.status = (lhs == rhs) ? Status::pass : Status::fail;
        return rec;
    });
}

}  // namespace resitan
