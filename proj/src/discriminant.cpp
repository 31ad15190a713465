#include "aeq/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace aeq {

namespace {

using Coeffs = std::vector<BigInt>;

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
    const int db = deg(b);
    const BigInt& lb = b.back();
    int steps = deg(a) - db + 1;
    while (deg(a) >= db) {
        const BigInt la = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        a.pop_back();
        trim(a);
        --steps;
    }
    // Each reduction step contributes one factor of lb; make up for skipped steps
    // when the degree dropped by more than one.
    if (steps > 0) {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : a) c *= scale;
    }
    return a;
}

BigInt content(const Coeffs& c) {
    BigInt g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

BigInt power(const BigInt& b, long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

// Subresultant algorithm for the resultant (Cohen, GTM 138, Alg. 3.3.7).
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    Coeffs A = f.coeffs(), B = g.coeffs();

    const BigInt a = content(A), b = content(B);
    for (auto& c : A) c /= a;
    for (auto& c : B) c /= b;
    const BigInt t = power(a, deg(B)) * power(b, deg(A));

    int s = 1;
    if (deg(A) < deg(B)) {
        std::swap(A, B);
        if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -1;
    }

    BigInt gg = 1, h = 1;
    while (deg(B) > 0) {
        const int delta = deg(A) - deg(B);
        if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
        Coeffs R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.empty()) return 0;
        const BigInt divisor = gg * power(h, delta);
        for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        B = std::move(R);
        gg = A.back();
        // h <- h^(1-delta) g^delta, exact over Z.
        if (delta == 0) {
        } else {
            BigInt num = power(gg, delta);
            BigInt den = power(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    // deg(B) == 0: B is a nonzero constant.
    const int dA = deg(A);
    BigInt hf;
    if (dA == 0) {
        hf = 1;
    } else {
        BigInt num = power(B.back(), dA);
        BigInt den = power(h, dA - 1);
        mpz_divexact(hf.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * hf;
}

BigInt discriminant(const IntPolynomial& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    if (n == 1) return 1;
    BigInt r = resultant(f, f.derivative());
    BigInt d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace aeq
