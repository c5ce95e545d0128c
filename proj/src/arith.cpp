#include "resitan/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "resitan/errors.hpp"

namespace resitan {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Witness set proven sufficient for every n < 3.3 * 10^24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 a, u64 d, int s) {
    u64 x = mod_pow_u(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 kBatch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_reduce(std::int64_t a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    // -(a + 1) avoids overflow at INT64_MIN.
    u64 r = static_cast<u64>(-(a + 1)) % m;
    return m - 1 - r;
}

u64 mod_pow_u(u64 b, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return result;
}

u64 mod_pow(std::int64_t b, u64 e, u64 m) { return mod_pow_u(mod_reduce(b, m), e, m); }

int jacobi(std::int64_t a_in, u64 n) {
    if (n == 0 || n % 2 == 0) throw InvalidInputError("jacobi: n must be odd and positive");
    u64 a = mod_reduce(a_in, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            u64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
    if (p < 3 || !is_prime(p)) {
        throw InvalidInputError("not an odd prime: " + std::to_string(p));
    }
    factors_ = prime_factors(p - 1);
    for (u64 g = 2;; ++g) {
        bool ok = std::all_of(factors_.begin(), factors_.end(),
                              [&](u64 q) { return mod_pow_u(g, (p - 1) / q, p) != 1; });
        if (ok) {
            generator_ = g;
            break;
        }
    }
}

std::optional<u64> sqrt_mod(u64 a, const PrimeContext& ctx) {
    const u64 p = ctx.p();
    if (a >= p) throw InvalidInputError("sqrt_mod: residue must lie in [0, p)");
    if (a == 0) return 0;
    if (mod_pow_u(a, (p - 1) / 2, p) != 1) return std::nullopt;

    u64 r;
    if (p % 4 == 3) {
        r = mod_pow_u(a, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (mod_pow_u(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 c = mod_pow_u(z, q, p);
        u64 t = mod_pow_u(a, q, p);
        r = mod_pow_u(a, (q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || lo > hi) return out;
    if (hi <= 50'000'000) {
        std::vector<bool> composite(hi + 1, false);
        for (u64 i = 2; i * i <= hi; ++i) {
            if (composite[i]) continue;
            for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
        }
        for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
            if (!composite[n]) out.push_back(n);
        }
        return out;
    }
    for (u64 n = lo; n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
        if (n == hi) break;
    }
    return out;
}

}  // namespace resitan
