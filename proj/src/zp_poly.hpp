// Dense polynomial arithmetic over F_p on raw coefficient vectors.
// Vectors are ascending and trimmed (no trailing zeros); zero is empty.
#pragma once

#include <cstdint>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq::detail {

using Coeffs = std::vector<u64>;

struct Zp {
    u64 p;

    explicit Zp(u64 modulus) : p(modulus) {}

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 mul(u64 a, u64 b) const {
        if (p <= 0xffffffffULL) return a * b % p;
        return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
    }
    // Below 2^28 a sum of up to 256 products p^2 fits in 64 bits, so
    // reductions can be deferred.
    bool lazy(std::size_t terms) const { return p < (u64{1} << 28) && terms <= 256; }

    u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p); }
    u64 inv(u64 a) const;
};

inline int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul(const Zp& F, const Coeffs& a, const Coeffs& b);
/// c = a * b, reusing the storage of c.
void mul_into(const Zp& F, const Coeffs& a, const Coeffs& b, Coeffs& c);
Coeffs sub(const Zp& F, const Coeffs& a, const Coeffs& b);
Coeffs add(const Zp& F, const Coeffs& a, const Coeffs& b);

/// a mod m, in place. m nonzero.
void rem_in_place(const Zp& F, Coeffs& a, const Coeffs& m);
/// Quotient of a by m; a is replaced by the remainder.
Coeffs div_rem(const Zp& F, Coeffs& a, const Coeffs& m);

Coeffs mul_mod(const Zp& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);
Coeffs pow_mod(const Zp& F, Coeffs base, u64 e, const Coeffs& m);
/// Exponent given as a big integer, bits consumed most-significant first.
Coeffs pow_mod(const Zp& F, const Coeffs& base, const BigInt& e, const Coeffs& m);
/// h(g) mod m by Horner's rule.
Coeffs compose_mod(const Zp& F, const Coeffs& h, const Coeffs& g, const Coeffs& m);

void make_monic(const Zp& F, Coeffs& a);
/// Monic gcd (empty when both inputs are zero).
Coeffs gcd(const Zp& F, Coeffs a, Coeffs b);
Coeffs derivative(const Zp& F, const Coeffs& a);

}  // namespace aeq::detail
