#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq {

/// Memory budget for one sieve (base primes plus segment), in bytes.
/// Read from AEQ_SIEVE_MEMORY_BYTES; defaults to 64 MiB.
std::size_t sieve_memory_budget();

/// Increasing stream of the primes in [lo, hi], produced by a segmented
/// sieve of Eratosthenes over odd numbers. Memory is bounded by the base
/// primes up to sqrt(hi) plus one segment.
class PrimeStream {
   public:
    /// Throws ResourceLimitError when the base primes do not fit the budget.
    PrimeStream(u64 lo, u64 hi);

    std::optional<u64> next();

   private:
    bool fill_segment();

    u64 lo_, hi_;
    std::vector<u64> base_;     // odd primes <= sqrt(hi)
    std::vector<char> segment_; // segment_[i] <-> seg_lo_ + 2i
    std::size_t segment_len_;
    u64 seg_lo_ = 0;
    std::size_t pos_ = 0;
    std::size_t filled_ = 0;
    u64 next_odd_;
    bool emit_two_;
    bool exhausted_ = false;
};

/// All primes <= x in increasing order.
std::vector<u64> primes_up_to(u64 x);
/// All primes in [lo, hi] in increasing order.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace aeq
