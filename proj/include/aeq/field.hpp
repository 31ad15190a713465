#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aeq/intpoly.hpp"
#include "aeq/modpoly.hpp"

namespace aeq {

enum class Irreducibility { certified, heuristic, asserted };

std::string to_string(Irreducibility s);

/// A number field given by a monic defining polynomial with nonzero
/// discriminant. Every prime dividing the polynomial discriminant is
/// excluded from types, sweeps and zeta coefficients.
class NumberField {
   public:
    const std::string& label() const noexcept { return label_; }
    const IntPolynomial& poly() const noexcept { return poly_; }
    int degree() const noexcept { return poly_.degree(); }
    const BigInt& poly_disc() const noexcept { return disc_; }
    const std::vector<BigInt>& excluded_primes() const noexcept { return excluded_; }
    Irreducibility irreducibility() const noexcept { return status_; }
    /// Proper factor degrees the mod-p degree sieve could not rule out.
    const std::vector<int>& surviving_factor_degrees() const noexcept { return surviving_; }
    /// Prime at which the polynomial was found irreducible, when that is how it was certified.
    std::optional<u64> irreducibility_witness() const noexcept { return witness_; }

    bool is_excluded(u64 p) const { return mpz_divisible_ui_p(disc_.get_mpz_t(), p) != 0; }

   private:
    friend NumberField new_field(std::string label, IntPolynomial f, bool assume_irreducible);

    std::string label_;
    IntPolynomial poly_;
    BigInt disc_;
    std::vector<BigInt> excluded_;
    Irreducibility status_ = Irreducibility::heuristic;
    std::vector<int> surviving_;
    std::optional<u64> witness_;
};

/// Validates f (monic, degree >= 1, nonzero discriminant) and classifies
/// irreducibility: certified when f is irreducible modulo some good prime
/// p <= 10^4, or when the degree sieve over the first 100 good primes rules
/// out every proper factor degree. Otherwise heuristic, or asserted when
/// assume_irreducible is set. A rational root is rejected as reducible.
/// Throws InvalidFieldError.
NumberField new_field(std::string label, IntPolynomial f, bool assume_irreducible = false);

/// Residue class degrees f_1 <= ... <= f_g of an unramified prime.
struct ArithmeticType {
    std::vector<int> parts;

    int g() const noexcept { return static_cast<int>(parts.size()); }
    int degree() const;
    /// Number of parts equal to 1, i.e. a_p.
    int ones() const;
    bool is_split() const;
    std::string to_string() const;

    static ArithmeticType from_multiset(const DegreeMultiset& m);

    friend bool operator==(const ArithmeticType&, const ArithmeticType&) = default;
    friend auto operator<=>(const ArithmeticType&, const ArithmeticType&) = default;
};

/// Throws ExcludedPrimeError when p divides the polynomial discriminant,
/// NotPrimeError when p is not prime.
ArithmeticType arithmetic_type(const NumberField& F, u64 p);
/// Number of prime ideals of norm p.
int ap(const NumberField& F, u64 p);

/// prod_i (X^{f_i} - 1).
IntPolynomial frobenius_charpoly(const ArithmeticType& t);

/// Coefficients c_0..c_k of prod_i 1/(1 - T^{f_i}); c_j counts ideals of norm p^j.
std::vector<u64> euler_coeffs(const ArithmeticType& t, int k);

/// a_n for 1 <= n <= limit with n coprime to every excluded prime.
struct ZetaCoefficients {
    u64 limit = 0;
    int degree = 0;
    std::map<u64, u64> values;

    std::optional<u64> at(u64 n) const;
};

ZetaCoefficients zeta_coeffs(const NumberField& F, u64 limit);

struct GaloisConsistency {
    bool consistent = true;
    std::optional<u64> witness;     // least p with 0 < a_p < n
    std::optional<int> witness_ap;
    u64 bound = 0;
};

/// Scans unramified p <= bound for a_p outside {0, n}. A witness proves F
/// is not Galois; consistency does not prove that it is.
GaloisConsistency galois_consistency(const NumberField& F, u64 bound);

}  // namespace aeq
