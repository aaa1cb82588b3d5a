#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace shapiro::detail {

// Runs fn(begin, end) over disjoint index blocks.  Each output index must
// depend only on its own column, so the partition cannot change results.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || count < 1024) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t block = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * block;
        if (lo >= count) break;
        const std::size_t hi = std::min(count, lo + block);
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace shapiro::detail
