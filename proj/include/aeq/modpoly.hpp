#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aeq/intpoly.hpp"

namespace aeq {

/// Polynomial over the prime field F_p, ascending coefficients in [0, p).
/// The modulus is validated as prime on construction and must be < 2^63.
class ModPolynomial {
   public:
    ModPolynomial(u64 modulus, std::vector<u64> coeffs);

    u64 modulus() const noexcept { return p_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

   private:
    struct Trusted {};
    ModPolynomial(Trusted, u64 modulus, std::vector<u64> coeffs) : p_(modulus), c_(std::move(coeffs)) {}
    friend ModPolynomial reduce_mod(const IntPolynomial& f, u64 p);
    friend class ModPolynomialAccess;

    u64 p_;
    std::vector<u64> c_;
};

/// Multiset of irreducible-factor degrees as sorted (degree, multiplicity) pairs.
struct DegreeMultiset {
    std::vector<std::pair<int, int>> parts;

    int total_degree() const;
    int multiplicity(int degree) const;
    /// Degrees repeated by multiplicity, ascending: {1:2, 3:1} -> (1,1,3).
    std::vector<int> flatten() const;
    /// "{1:2, 3:1}"
    std::string to_string() const;

    static DegreeMultiset from_degrees(std::vector<int> degrees);

    friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

/// Throws NotPrimeError if p is not prime.
ModPolynomial reduce_mod(const IntPolynomial& f, u64 p);

/// Degrees of the irreducible factors by distinct-degree factorization.
/// The input must be squarefree; a leading coefficient other than 1 is
/// normalized away. Throws NotSquarefreeError otherwise.
DegreeMultiset ddf_degrees(const ModPolynomial& fbar);

/// Number of distinct roots in F_p by exhaustive evaluation. O(p * deg).
u64 count_roots(const ModPolynomial& fbar);

inline constexpr u64 kDefaultSeed = 0x5eed5eedULL;

/// Complete factorization into monic irreducibles: distinct-degree pass by
/// repeated p-th powering, then randomized equal-degree splitting
/// (Cantor-Zassenhaus; trace map in characteristic 2).
std::vector<ModPolynomial> factor_irreducible(const ModPolynomial& fbar, u64 seed = kDefaultSeed);

/// Degree multiset of factor_irreducible. Same contract as ddf_degrees.
DegreeMultiset factor_full(const ModPolynomial& fbar, u64 seed = kDefaultSeed);

/// Product of polynomials over the same field.
ModPolynomial multiply(const ModPolynomial& a, const ModPolynomial& b);

}  // namespace aeq
