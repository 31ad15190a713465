#include <optional>
#include <random>
#include <stdexcept>

#include "aeq/errors.hpp"
#include "aeq/modpoly.hpp"
#include "modpoly_access.hpp"
#include "zp_poly.hpp"

namespace aeq {

using detail::Coeffs;
using detail::deg;
using detail::Zp;

namespace {

Coeffs monic_input(const ModPolynomial& fbar, const Zp& F) {
    if (fbar.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Coeffs f = fbar.coeffs();
    detail::make_monic(F, f);
    return f;
}

void require_squarefree(const Zp& F, const Coeffs& f) {
    if (deg(f) < 1) return;
    Coeffs g = detail::gcd(F, f, detail::derivative(F, f));
    if (deg(g) != 0) throw NotSquarefreeError("polynomial is not squarefree modulo " + std::to_string(F.p));
}

}  // namespace

DegreeMultiset ddf_degrees(const ModPolynomial& fbar) {
    const Zp F{fbar.modulus()};
    Coeffs rem = monic_input(fbar, F);
    require_squarefree(F, rem);

    DegreeMultiset out;
    if (deg(rem) <= 0) return out;

    const Coeffs x{0, 1};
    Coeffs xp = detail::pow_mod(F, x, F.p, rem);  // x^p mod f
    Coeffs h = xp;                                // x^(p^d) mod rem
    for (int d = 1; 2 * d <= deg(rem); ++d) {
        Coeffs g = detail::gcd(F, detail::sub(F, h, x), rem);
        if (deg(g) > 0) {
            out.parts.emplace_back(d, deg(g) / d);
            Coeffs r = rem;
            rem = detail::div_rem(F, r, g);
        }
        if (2 * (d + 1) > deg(rem)) break;
        detail::rem_in_place(F, xp, rem);
        detail::rem_in_place(F, h, rem);
        h = detail::compose_mod(F, h, xp, rem);
    }
    if (deg(rem) > 0) out.parts.emplace_back(deg(rem), 1);
    return out;
}

u64 count_roots(const ModPolynomial& fbar) {
    const Zp F{fbar.modulus()};
    const auto& c = fbar.coeffs();
    if (c.empty()) return F.p;
    u64 roots = 0;
    for (u64 x = 0; x < F.p; ++x) {
        u64 acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
        if (acc == 0) ++roots;
    }
    return roots;
}

namespace {

// Splits a product of distinct monic irreducibles, all of degree d, into its factors.
void equal_degree_split(const Zp& F, const Coeffs& g, int d, std::mt19937_64& rng, std::vector<Coeffs>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<u64> coeff(0, F.p - 1);
    BigInt exponent;
    std::optional<u64> small_exponent;
    if (F.p != 2) {
        BigInt pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), F.p, static_cast<unsigned long>(d));
        exponent = (pd - 1) / 2;
        if (exponent.fits_ulong_p()) small_exponent = exponent.get_ui();
    }
    for (;;) {
        Coeffs a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = coeff(rng);
        detail::trim(a);
        if (deg(a) < 1) continue;

        Coeffs t;
        if (F.p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            Coeffs power = a;
            t = a;
            for (int i = 1; i < d; ++i) {
                power = detail::mul_mod(F, power, power, g);
                t = detail::add(F, t, power);
            }
        } else {
            Coeffs power = small_exponent ? detail::pow_mod(F, a, *small_exponent, g) : detail::pow_mod(F, a, exponent, g);
            t = detail::sub(F, power, Coeffs{1});
        }
        Coeffs h = detail::gcd(F, t, g);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            Coeffs rest = g;
            Coeffs q = detail::div_rem(F, rest, h);
            equal_degree_split(F, h, d, rng, out);
            equal_degree_split(F, q, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModPolynomial> factor_irreducible(const ModPolynomial& fbar, u64 seed) {
    const Zp F{fbar.modulus()};
    Coeffs rem = monic_input(fbar, F);
    require_squarefree(F, rem);

    std::mt19937_64 rng(seed);
    std::vector<Coeffs> factors;
    const Coeffs x{0, 1};
    Coeffs h = x;
    for (int d = 1; deg(rem) > 0; ++d) {
        if (2 * d > deg(rem)) {
            // No factor of degree < d remains, so rem is irreducible.
            factors.push_back(rem);
            break;
        }
        // x^(p^d) by one more p-th power of the previous stage.
        h = detail::pow_mod(F, h, F.p, rem);
        Coeffs g = detail::gcd(F, detail::sub(F, h, x), rem);
        if (deg(g) > 0) {
            equal_degree_split(F, g, d, rng, factors);
            Coeffs r = rem;
            rem = detail::div_rem(F, r, g);
            detail::rem_in_place(F, h, rem);
        }
    }
    std::vector<ModPolynomial> out;
    out.reserve(factors.size());
    for (auto& f : factors) out.push_back(ModPolynomialAccess::make(F.p, std::move(f)));
    return out;
}

DegreeMultiset factor_full(const ModPolynomial& fbar, u64 seed) {
    std::vector<int> degrees;
    for (const auto& f : factor_irreducible(fbar, seed)) degrees.push_back(f.degree());
    return DegreeMultiset::from_degrees(std::move(degrees));
}

}  // namespace aeq
