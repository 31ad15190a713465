#include <gtest/gtest.h>

#include <random>

#include "aeq/errors.hpp"
#include "aeq/modpoly.hpp"
#include "aeq/primes.hpp"
#include "oracles.hpp"

using namespace aeq;

namespace {

u64 primes_below_10k(std::mt19937_64& rng) {
    static const std::vector<u64> primes = primes_up_to(10000);
    return primes[rng() % primes.size()];
}

DegreeMultiset ms(std::vector<std::pair<int, int>> parts) { return DegreeMultiset{std::move(parts)}; }

}  // namespace

TEST(ReduceMod, Examples) {
    EXPECT_EQ(reduce_mod(parse_poly("x^3-2"), 5).coeffs(), (std::vector<u64>{3, 0, 0, 1}));
    EXPECT_EQ(reduce_mod(parse_poly("x^2+1"), 2).coeffs(), (std::vector<u64>{1, 0, 1}));
    EXPECT_THROW(reduce_mod(parse_poly("x^2+1"), 4), NotPrimeError);
    EXPECT_THROW(reduce_mod(parse_poly("x^2+1"), 1), NotPrimeError);
    // 10^21 = 3^21 = 6 (mod 7)
    EXPECT_EQ(reduce_mod(parse_poly("[-1000000000000000000000,0,1]"), 7).coeffs()[0], 1u);
}

TEST(ModPolynomial, Validation) {
    EXPECT_THROW(ModPolynomial(9, {1, 1}), NotPrimeError);
    EXPECT_THROW(ModPolynomial(7, {7, 1}), std::invalid_argument);
    EXPECT_EQ(ModPolynomial(7, {1, 0, 0}).degree(), 0);
}

TEST(DdfDegrees, Examples) {
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^2+1"), 5)), ms({{1, 2}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^2+1"), 3)), ms({{2, 1}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x-1"), 7)), ms({{1, 1}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^3-2"), 5)), ms({{1, 1}, {2, 1}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^4+1"), 3)), ms({{2, 2}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^3-2"), 31)), ms({{1, 3}}));
}

TEST(DdfDegrees, RejectsRepeatedFactors) {
    EXPECT_THROW(ddf_degrees(reduce_mod(parse_poly("x^2+1"), 2)), NotSquarefreeError);
    EXPECT_THROW(ddf_degrees(reduce_mod(parse_poly("x^3-2"), 3)), NotSquarefreeError);
    EXPECT_THROW(factor_full(reduce_mod(parse_poly("x^2+1"), 2)), NotSquarefreeError);
}

TEST(DdfDegrees, LargePrime) {
    // p = 2^61 - 1: x^2 + 1 splits iff p = 1 mod 4; here p = 3 mod 4.
    const u64 p = (u64{1} << 61) - 1;
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^2+1"), p)), ms({{2, 1}}));
    EXPECT_EQ(ddf_degrees(reduce_mod(parse_poly("x^2-4"), p)), ms({{1, 2}}));
}

TEST(CountRoots, Examples) {
    EXPECT_EQ(count_roots(reduce_mod(parse_poly("x^2+1"), 5)), 2u);
    EXPECT_EQ(count_roots(reduce_mod(parse_poly("x^2+1"), 3)), 0u);
    EXPECT_EQ(count_roots(reduce_mod(parse_poly("x^2+1"), 2)), 1u);
}

TEST(FactorFull, Examples) {
    EXPECT_EQ(factor_full(reduce_mod(parse_poly("x^2+1"), 5)), ms({{1, 2}}));
    EXPECT_EQ(factor_full(reduce_mod(parse_poly("x^3-2"), 5)), ms({{1, 1}, {2, 1}}));
    EXPECT_EQ(factor_full(reduce_mod(parse_poly("x^4+1"), 3)), ms({{2, 2}}));
}

TEST(FactorFull, BruteForceOracleAgrees) {
    // x^4 + 1 mod 3 by trial division with the 9 monic quadratics.
    EXPECT_EQ(oracle::brute_force_degrees(reduce_mod(parse_poly("x^4+1"), 3)), ms({{2, 2}}));
    std::mt19937_64 rng(5);
    for (u64 p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 200; ++i) {
            auto f = oracle::random_monic(rng, p, 1 + static_cast<int>(rng() % 6));
            if (!oracle::squarefree(f)) continue;
            const auto expected = oracle::brute_force_degrees(f);
            EXPECT_EQ(ddf_degrees(f), expected);
            EXPECT_EQ(factor_full(f), expected);
        }
    }
}

TEST(FactorFull, FactorsMultiplyBack) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const u64 primes[] = {2, 3, 5, 13, 101, 7919, 1000003};
        const u64 p = primes[rng() % 7];
        auto f = oracle::random_monic(rng, p, 1 + static_cast<int>(rng() % 8));
        if (!oracle::squarefree(f)) continue;
        auto factors = factor_irreducible(f, rng());
        ModPolynomial prod(p, {1});
        for (const auto& g : factors) {
            EXPECT_TRUE(g.is_monic());
            EXPECT_EQ(ddf_degrees(g).parts.size(), 1u);
            EXPECT_EQ(ddf_degrees(g).parts[0].second, 1);
            prod = multiply(prod, g);
        }
        EXPECT_EQ(prod, f);
    }
}

TEST(FactorFull, SeedDoesNotChangeDegrees) {
    auto f = reduce_mod(parse_poly("x^8 - 3"), 73);
    const auto base = factor_full(f);
    for (u64 seed = 1; seed < 20; ++seed) EXPECT_EQ(factor_full(f, seed), base);
}

TEST(DdfDegrees, Properties) {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const u64 p = primes_below_10k(rng);
        auto f = oracle::random_monic(rng, p, 1 + static_cast<int>(rng() % 8));
        if (!oracle::squarefree(f)) continue;
        const auto d = ddf_degrees(f);
        EXPECT_EQ(d.total_degree(), f.degree());
        EXPECT_EQ(d, factor_full(f, rng()));
        if (p < 2000) EXPECT_EQ(static_cast<u64>(d.multiplicity(1)), count_roots(f));
        ++checked;
    }
    EXPECT_GT(checked, 1500);
}
