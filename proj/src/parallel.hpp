#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "aeq/integers.hpp"

namespace aeq::detail {

// Runs fn(lo, hi) over `threads` contiguous pieces of [2, xmax] and returns the
// per-piece results in range order.
template <class Fn>
auto map_prime_ranges(u64 xmax, unsigned threads, Fn fn) {
    using Result = decltype(fn(u64{}, u64{}));
    threads = std::max(1u, threads);
    const u64 span = xmax - 1;
    if (span < threads) threads = 1;
    std::vector<Result> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < threads; ++i) {
            const u64 lo = 2 + static_cast<u64>(static_cast<unsigned __int128>(span) * i / threads);
            const u64 hi = 1 + static_cast<u64>(static_cast<unsigned __int128>(span) * (i + 1) / threads);
            auto task = [&, i, lo, hi] {
                try {
                    parts[i] = fn(lo, hi);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            };
            if (threads == 1)
                task();
            else
                workers.emplace_back(task);
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return parts;
}

}  // namespace aeq::detail
