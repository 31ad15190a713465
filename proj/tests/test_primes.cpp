#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "aeq/errors.hpp"
#include "aeq/integers.hpp"
#include "aeq/primes.hpp"

using namespace aeq;

namespace {

bool trial_division(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(PrimesUpTo, Examples) {
    EXPECT_EQ(primes_up_to(10), (std::vector<u64>{2, 3, 5, 7}));
    EXPECT_EQ(primes_up_to(2), (std::vector<u64>{2}));
    auto thirty = primes_up_to(30);
    EXPECT_EQ(thirty.size(), 10u);
    EXPECT_EQ(thirty.back(), 29u);
    EXPECT_THROW(primes_up_to(1), std::invalid_argument);
}

TEST(PrimesUpTo, MatchesTrialDivision) {
    std::vector<u64> expected;
    for (u64 n = 0; n <= 200000; ++n)
        if (trial_division(n)) expected.push_back(n);
    EXPECT_EQ(primes_up_to(200000), expected);
    EXPECT_EQ(primes_up_to(1000000).size(), 78498u);
}

TEST(PrimesInRange, SubrangesConcatenate) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        u64 lo = rng() % 100000, mid = lo + rng() % 50000, hi = mid + rng() % 50000;
        auto whole = primes_in_range(lo, hi);
        auto left = primes_in_range(lo, mid);
        auto right = primes_in_range(mid + 1, hi);
        left.insert(left.end(), right.begin(), right.end());
        EXPECT_EQ(whole, left);
    }
    EXPECT_TRUE(primes_in_range(24, 28).empty());
    EXPECT_EQ(primes_in_range(0, 3), (std::vector<u64>{2, 3}));
}

TEST(PrimeStream, HighRangeAgreesWithMillerRabin) {
    const u64 lo = 1000000000000ULL, hi = lo + 20000;
    std::vector<u64> expected;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) expected.push_back(n);
    EXPECT_EQ(primes_in_range(lo, hi), expected);
}

TEST(PrimeStream, MemoryBudget) {
    ::setenv("AEQ_SIEVE_MEMORY_BYTES", "4096", 1);
    EXPECT_THROW(PrimeStream(2, 1000000000000ULL), ResourceLimitError);
    EXPECT_EQ(primes_up_to(100000).size(), 9592u);  // small segments still work
    ::unsetenv("AEQ_SIEVE_MEMORY_BYTES");
}

TEST(IsPrime, Examples) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    for (u64 n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), trial_division(n)) << n;
}

TEST(PrimeDivisors, Examples) {
    EXPECT_EQ(prime_divisors(BigInt(-108)), (std::vector<BigInt>{2, 3}));
    EXPECT_TRUE(prime_divisors(BigInt(1)).empty());
    EXPECT_TRUE(prime_divisors(BigInt(0)).empty());
    BigInt n = BigInt(1000000007) * BigInt("1000000000039") * 6;
    EXPECT_EQ(prime_divisors(n), (std::vector<BigInt>{2, 3, 1000000007, BigInt("1000000000039")}));
}
