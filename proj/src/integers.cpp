#include "aeq/integers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aeq {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (n % q == 0) return n == q;
    }
    if (n < 37 * 37) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Bases proven sufficient for n < 2^64 (Sinclair).
    static constexpr u64 bases[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (u64 a : bases) {
        a %= n;
        if (a == 0) continue;
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

BigInt pollard_brent(const BigInt& n, unsigned long c) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) -> BigInt { return BigInt((v * v + c) % n); };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            BigInt diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_into(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out.push_back(n);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(BigInt(n / d), out);
            return;
        }
    }
}

}  // namespace

std::vector<BigInt> prime_divisors(const BigInt& value) {
    BigInt n = abs(value);
    std::vector<BigInt> out;
    if (n <= 1) return out;
    for (unsigned long q = 2; q < 100000 && q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out.emplace_back(q);
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) n /= q;
        }
    }
    std::vector<BigInt> big;
    split_into(n, big);
    for (auto& b : big) out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

double log10_abs(const BigInt& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log10(std::fabs(mant)) + static_cast<double>(exp) * std::log10(2.0);
}

std::string fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace aeq
