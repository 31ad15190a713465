#include "aeq/primes.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "aeq/errors.hpp"

namespace aeq {

namespace {

constexpr std::size_t kDefaultBudget = std::size_t{64} << 20;
constexpr std::size_t kMaxSegment = std::size_t{1} << 18;

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::size_t sieve_memory_budget() {
    if (const char* env = std::getenv("AEQ_SIEVE_MEMORY_BYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

PrimeStream::PrimeStream(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
    if (hi_ >= (u64{1} << 62)) throw ResourceLimitError("sieve bound exceeds 2^62");
    emit_two_ = lo_ <= 2 && hi_ >= 2;
    next_odd_ = std::max<u64>(lo_ | 1, 3);
    if (hi_ < 3 || next_odd_ > hi_) {
        exhausted_ = true;
        segment_len_ = 0;
        return;
    }

    const u64 root = isqrt(hi_);
    const std::size_t budget = sieve_memory_budget();
    // Base sieve needs root bytes transiently; the base primes ~ root/ln(root) words.
    const double base_words = root < 10 ? 4.0 : 1.3 * static_cast<double>(root) / std::log(static_cast<double>(root));
    const double needed = static_cast<double>(root) + 8.0 * base_words;
    if (needed > static_cast<double>(budget))
        throw ResourceLimitError("sieve to " + std::to_string(hi_) + " needs about " +
                                 std::to_string(static_cast<u64>(needed)) + " bytes, budget is " +
                                 std::to_string(budget));
    segment_len_ = std::max<std::size_t>(std::min(kMaxSegment, (budget - static_cast<std::size_t>(needed)) / 2), 64);

    std::vector<char> small(root + 1, 1);
    for (u64 i = 2; i * i <= root; ++i)
        if (small[i])
            for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    for (u64 i = 3; i <= root; i += 2)
        if (small[i]) base_.push_back(i);
    segment_.resize(segment_len_);
}

bool PrimeStream::fill_segment() {
    if (next_odd_ > hi_) return false;
    seg_lo_ = next_odd_;
    const u64 span = std::min<u64>(segment_len_, (hi_ - seg_lo_) / 2 + 1);
    filled_ = static_cast<std::size_t>(span);
    std::fill(segment_.begin(), segment_.begin() + static_cast<std::ptrdiff_t>(filled_), 1);
    const u64 seg_hi = seg_lo_ + 2 * (span - 1);
    for (u64 q : base_) {
        if (q * q > seg_hi) break;
        u64 start = std::max(q * q, (seg_lo_ + q - 1) / q * q);
        if ((start & 1) == 0) start += q;
        for (u64 j = (start - seg_lo_) / 2; j < filled_; j += q) segment_[j] = 0;
    }
    if (seg_lo_ == 1) segment_[0] = 0;
    pos_ = 0;
    next_odd_ = seg_hi + 2;
    return true;
}

std::optional<u64> PrimeStream::next() {
    if (emit_two_) {
        emit_two_ = false;
        return 2;
    }
    if (exhausted_) return std::nullopt;
    for (;;) {
        while (pos_ < filled_) {
            const std::size_t i = pos_++;
            if (segment_[i]) return seg_lo_ + 2 * i;
        }
        if (!fill_segment()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < lo) return out;
    PrimeStream s(lo, hi);
    while (auto p = s.next()) out.push_back(*p);
    return out;
}

std::vector<u64> primes_up_to(u64 x) {
    if (x < 2) throw std::invalid_argument("primes_up_to requires x >= 2");
    return primes_in_range(2, x);
}

}  // namespace aeq
