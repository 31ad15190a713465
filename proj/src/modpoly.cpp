#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "aeq/errors.hpp"
#include "aeq/modpoly.hpp"
#include "modpoly_access.hpp"
#include "zp_poly.hpp"

namespace aeq {

namespace detail {

u64 Zp::inv(u64 a) const {
    if (p < (u64{1} << 62)) {
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
        while (nr != 0) {
            const std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (r != 1) throw std::domain_error("element not invertible");
        return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
    }
    __int128 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible");
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

void mul_into(const Zp& F, const Coeffs& a, const Coeffs& b, Coeffs& c) {
    c.clear();
    if (a.empty() || b.empty()) return;
    c.resize(a.size() + b.size() - 1, 0);
    if (F.lazy(std::min(a.size(), b.size()))) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        for (auto& v : c) v %= F.p;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
        }
    }
    trim(c);
}

Coeffs mul(const Zp& F, const Coeffs& a, const Coeffs& b) {
    Coeffs c;
    mul_into(F, a, b, c);
    return c;
}

Coeffs add(const Zp& F, const Coeffs& a, const Coeffs& b) {
    Coeffs c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

Coeffs sub(const Zp& F, const Coeffs& a, const Coeffs& b) {
    Coeffs c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

Coeffs div_rem(const Zp& F, Coeffs& a, const Coeffs& m) {
    if (m.empty()) throw std::domain_error("division by zero polynomial");
    const int dm = deg(m);
    if (deg(a) < dm) return {};
    const u64 linv = m.back() == 1 ? 1 : F.inv(m.back());
    Coeffs q(a.size() - m.size() + 1, 0);
    for (int i = deg(a); i >= dm; --i) {
        u64 c = a[i];
        if (c == 0) continue;
        c = F.mul(c, linv);
        q[i - dm] = c;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = F.sub(a[i - dm + j], F.mul(c, m[j]));
    }
    a.resize(dm);
    trim(a);
    trim(q);
    return q;
}

void rem_in_place(const Zp& F, Coeffs& a, const Coeffs& m) {
    if (m.empty()) throw std::domain_error("division by zero polynomial");
    const int dm = deg(m);
    if (deg(a) < dm) return;
    const u64 linv = m.back() == 1 ? 1 : F.inv(m.back());
    if (F.lazy(m.size() + 1)) {
        // Each slot collects at most deg(m) + 1 products before it leads.
        for (int i = deg(a); i >= dm; --i) {
            u64 c = a[i] % F.p;
            if (c == 0) continue;
            c = F.neg(F.mul(c, linv));
            for (int j = 0; j < dm; ++j) a[i - dm + j] += c * m[j];
        }
        a.resize(dm);
        for (auto& v : a) v %= F.p;
        trim(a);
        return;
    }
    for (int i = deg(a); i >= dm; --i) {
        u64 c = a[i];
        if (c == 0) continue;
        c = F.mul(c, linv);
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = F.sub(a[i - dm + j], F.mul(c, m[j]));
    }
    a.resize(dm);
    trim(a);
}

Coeffs mul_mod(const Zp& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
    Coeffs c = mul(F, a, b);
    rem_in_place(F, c, m);
    return c;
}

namespace {

// acc = acc * b mod m, with `scratch` reused across calls.
void mul_mod_assign(const Zp& F, Coeffs& acc, const Coeffs& b, const Coeffs& m, Coeffs& scratch) {
    mul_into(F, acc, b, scratch);
    rem_in_place(F, scratch, m);
    std::swap(acc, scratch);
}

}  // namespace

Coeffs pow_mod(const Zp& F, Coeffs base, u64 e, const Coeffs& m) {
    Coeffs result{1};
    rem_in_place(F, result, m);
    rem_in_place(F, base, m);
    Coeffs scratch;
    scratch.reserve(2 * m.size());
    while (e) {
        if (e & 1) mul_mod_assign(F, result, base, m, scratch);
        e >>= 1;
        if (e) mul_mod_assign(F, base, base, m, scratch);
    }
    return result;
}

Coeffs pow_mod(const Zp& F, const Coeffs& base, const BigInt& e, const Coeffs& m) {
    Coeffs result{1};
    rem_in_place(F, result, m);
    Coeffs b = base;
    rem_in_place(F, b, m);
    if (e == 0) return result;
    Coeffs scratch;
    scratch.reserve(2 * m.size());
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        mul_mod_assign(F, result, result, m, scratch);
        if (mpz_tstbit(e.get_mpz_t(), i)) mul_mod_assign(F, result, b, m, scratch);
    }
    return result;
}

Coeffs compose_mod(const Zp& F, const Coeffs& h, const Coeffs& g, const Coeffs& m) {
    Coeffs acc, scratch;
    for (int i = deg(h); i >= 0; --i) {
        mul_mod_assign(F, acc, g, m, scratch);
        if (acc.empty()) acc.push_back(0);
        acc[0] = F.add(acc[0], h[i]);
        trim(acc);
    }
    return acc;
}

void make_monic(const Zp& F, Coeffs& a) {
    if (a.empty() || a.back() == 1) return;
    const u64 linv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, linv);
}

Coeffs gcd(const Zp& F, Coeffs a, Coeffs b) {
    while (!b.empty()) {
        rem_in_place(F, a, b);
        std::swap(a, b);
    }
    make_monic(F, a);
    return a;
}

Coeffs derivative(const Zp& F, const Coeffs& a) {
    Coeffs d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.p));
    trim(d);
    return d;
}

}  // namespace detail

ModPolynomial::ModPolynomial(u64 modulus, std::vector<u64> coeffs) : p_(modulus), c_(std::move(coeffs)) {
    if (p_ > (std::numeric_limits<u64>::max() >> 1)) throw std::invalid_argument("modulus must be below 2^63");
    if (!is_prime(p_)) throw NotPrimeError(p_);
    for (u64 c : c_)
        if (c >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial reduce_mod(const IntPolynomial& f, u64 p) {
    if (p > (std::numeric_limits<u64>::max() >> 1)) throw std::invalid_argument("modulus must be below 2^63");
    if (!is_prime(p)) throw NotPrimeError(p);
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(mpz_fdiv_ui(a.get_mpz_t(), p));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return ModPolynomial(ModPolynomial::Trusted{}, p, std::move(c));
}

ModPolynomial multiply(const ModPolynomial& a, const ModPolynomial& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("moduli differ");
    detail::Zp F{a.modulus()};
    return ModPolynomialAccess::make(a.modulus(), detail::mul(F, a.coeffs(), b.coeffs()));
}

// ---------------------------------------------------------------------------

int DegreeMultiset::total_degree() const {
    int s = 0;
    for (auto [d, m] : parts) s += d * m;
    return s;
}

int DegreeMultiset::multiplicity(int degree) const {
    for (auto [d, m] : parts)
        if (d == degree) return m;
    return 0;
}

std::vector<int> DegreeMultiset::flatten() const {
    std::vector<int> out;
    for (auto [d, m] : parts) out.insert(out.end(), static_cast<std::size_t>(m), d);
    return out;
}

std::string DegreeMultiset::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts[i].first) + ":" + std::to_string(parts[i].second);
    }
    return s + "}";
}

DegreeMultiset DegreeMultiset::from_degrees(std::vector<int> degrees) {
    std::map<int, int> counts;
    for (int d : degrees) ++counts[d];
    DegreeMultiset out;
    for (auto [d, m] : counts) out.parts.emplace_back(d, m);
    return out;
}

}  // namespace aeq
