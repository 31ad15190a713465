#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace aeq {

using BigInt = mpz_class;
using Rational = mpq_class;
using u64 = std::uint64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Distinct prime divisors of |n| in increasing order (empty for n = 0, +-1).
/// Trial division followed by Pollard-Brent on the cofactor.
std::vector<BigInt> prime_divisors(const BigInt& n);

/// Value of a BigInt if it fits in int64.
std::optional<std::int64_t> to_int64(const BigInt& v);

/// log10 |v| for v != 0, robust for values far beyond double range.
double log10_abs(const BigInt& v);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string fraction_string(const Rational& q);

}  // namespace aeq
