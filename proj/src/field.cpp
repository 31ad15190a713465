#include "aeq/field.hpp"

#include <algorithm>
#include <bitset>

#include "aeq/errors.hpp"
#include "aeq/primes.hpp"

namespace aeq {

std::string to_string(Irreducibility s) {
    switch (s) {
        case Irreducibility::certified: return "certified";
        case Irreducibility::heuristic: return "heuristic";
        case Irreducibility::asserted: return "asserted";
    }
    return "unknown";
}

namespace {

constexpr u64 kCertifyPrimeBound = 10000;
constexpr int kSievePrimes = 100;

// All divisors of |n| (n != 0), from its prime factorization.
std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{1};
    BigInt rest = abs(n);
    for (const auto& q : prime_divisors(rest)) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
            rest /= q;
            ++e;
        }
        const std::size_t base = out.size();
        BigInt pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<BigInt> rational_root(const IntPolynomial& f) {
    const BigInt& c0 = f.coeffs().front();
    if (c0 == 0) return BigInt(0);
    for (const auto& d : divisors(c0)) {
        if (f.evaluate(d) == 0) return d;
        BigInt m = -d;
        if (f.evaluate(m) == 0) return m;
    }
    return std::nullopt;
}

}  // namespace

NumberField new_field(std::string label, IntPolynomial f, bool assume_irreducible) {
    if (f.degree() < 1) throw InvalidFieldError("defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw InvalidFieldError("defining polynomial must be monic: " + render(f));
    BigInt disc = discriminant(f);
    if (disc == 0) throw InvalidFieldError("zero discriminant (repeated root): " + render(f));

    NumberField F;
    F.label_ = std::move(label);
    F.poly_ = std::move(f);
    F.disc_ = std::move(disc);
    F.excluded_ = prime_divisors(F.disc_);

    const int n = F.degree();
    if (n == 1) {
        F.status_ = Irreducibility::certified;
        return F;
    }

    // Irreducible modulo a good prime implies irreducible over Q.
    std::vector<DegreeMultiset> patterns;
    PrimeStream primes(2, kCertifyPrimeBound);
    while (auto p = primes.next()) {
        if (F.is_excluded(*p)) continue;
        DegreeMultiset m = ddf_degrees(reduce_mod(F.poly_, *p));
        if (m.parts.size() == 1 && m.parts[0].second == 1) {
            F.status_ = Irreducibility::certified;
            F.witness_ = *p;
            return F;
        }
        if (static_cast<int>(patterns.size()) < kSievePrimes) patterns.push_back(std::move(m));
    }

    // A rational factor of degree d forces a sub-multiset summing to d at every good prime.
    std::vector<bool> possible(static_cast<std::size_t>(n), true);
    possible[0] = false;
    for (const auto& m : patterns) {
        std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
        reach[0] = true;
        for (int deg : m.flatten())
            for (int s = n; s >= deg; --s)
                if (reach[static_cast<std::size_t>(s - deg)]) reach[static_cast<std::size_t>(s)] = true;
        for (int d = 1; d < n; ++d)
            if (!reach[static_cast<std::size_t>(d)]) possible[static_cast<std::size_t>(d)] = false;
    }
    for (int d = 1; d < n; ++d)
        if (possible[static_cast<std::size_t>(d)]) F.surviving_.push_back(d);

    if (F.surviving_.empty()) {
        F.status_ = Irreducibility::certified;
        return F;
    }
    if (possible[1]) {
        if (auto r = rational_root(F.poly_))
            throw InvalidFieldError("reducible: rational root " + r->get_str() + " of " + render(F.poly_));
        F.surviving_.erase(F.surviving_.begin());
        // Linear factors are excluded by the root test; the complementary degree goes with them.
        F.surviving_.erase(std::remove(F.surviving_.begin(), F.surviving_.end(), n - 1), F.surviving_.end());
        if (F.surviving_.empty()) {
            F.status_ = Irreducibility::certified;
            return F;
        }
    }
    F.status_ = assume_irreducible ? Irreducibility::asserted : Irreducibility::heuristic;
    return F;
}

// ---------------------------------------------------------------------------

int ArithmeticType::degree() const {
    int s = 0;
    for (int f : parts) s += f;
    return s;
}

int ArithmeticType::ones() const { return static_cast<int>(std::count(parts.begin(), parts.end(), 1)); }

bool ArithmeticType::is_split() const {
    return std::all_of(parts.begin(), parts.end(), [](int f) { return f == 1; });
}

std::string ArithmeticType::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

ArithmeticType ArithmeticType::from_multiset(const DegreeMultiset& m) { return ArithmeticType{m.flatten()}; }

ArithmeticType arithmetic_type(const NumberField& F, u64 p) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (F.is_excluded(p)) throw ExcludedPrimeError(p);
    return ArithmeticType::from_multiset(ddf_degrees(reduce_mod(F.poly(), p)));
}

int ap(const NumberField& F, u64 p) { return arithmetic_type(F, p).ones(); }

IntPolynomial frobenius_charpoly(const ArithmeticType& t) {
    IntPolynomial acc{1};
    for (int f : t.parts) {
        std::vector<BigInt> c(static_cast<std::size_t>(f) + 1);
        c.front() = -1;
        c.back() = 1;
        acc = acc * IntPolynomial(std::move(c));
    }
    return acc;
}

std::vector<u64> euler_coeffs(const ArithmeticType& t, int k) {
    if (k < 0) throw std::invalid_argument("euler_coeffs requires k >= 0");
    std::vector<u64> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    // Dividing by (1 - T^f) is the running sum c_j += c_{j-f}.
    for (int f : t.parts)
        for (int j = f; j <= k; ++j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - f)];
    return c;
}

GaloisConsistency galois_consistency(const NumberField& F, u64 bound) {
    if (bound < 2) throw std::invalid_argument("galois_consistency requires bound >= 2");
    GaloisConsistency out;
    out.bound = bound;
    const int n = F.degree();
    PrimeStream primes(2, bound);
    while (auto p = primes.next()) {
        if (F.is_excluded(*p)) continue;
        const int a = ap(F, *p);
        if (a != 0 && a != n) {
            out.consistent = false;
            out.witness = *p;
            out.witness_ap = a;
            break;
        }
    }
    return out;
}

}  // namespace aeq
