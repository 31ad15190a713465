#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq {

/// Polynomial in Z[x] with arbitrary-precision coefficients, stored in
/// ascending degree order. The coefficient vector never carries trailing
/// zeros, so the zero polynomial is the empty vector.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const BigInt& leading() const;
    /// Coefficient of x^i; zero beyond the degree.
    BigInt operator[](std::size_t i) const;

    IntPolynomial derivative() const;
    /// gcd of the coefficients, non-negative.
    BigInt content() const;
    BigInt evaluate(const BigInt& x) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

   private:
    std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// Accepts "[c0,c1,...,cn]" (ascending) or an expression in x such as
/// "x^3 - 2", "3*x^2+x", "-x + 4". Whitespace is ignored.
/// Throws ParseError on malformed input or a non-integer coefficient.
IntPolynomial parse_poly(std::string_view text);

/// Canonical human-readable form, highest degree first: "x^3 - 2".
std::string render(const IntPolynomial& f);

/// Resultant Res(f, g) by the subresultant pseudo-remainder sequence.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires degree >= 1.
BigInt discriminant(const IntPolynomial& f);

}  // namespace aeq
