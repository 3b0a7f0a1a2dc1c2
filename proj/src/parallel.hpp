#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace vtot::detail {

inline unsigned worker_count(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for every i in [0, count) on a pool of workers pulling
/// indices from a shared counter, and returns the results in index order.
template <typename Fn>
auto ordered_parallel_map(std::size_t count, unsigned threads, Fn fn)
{
    using result_t = decltype(fn(std::size_t{}));
    std::vector<result_t> results(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            results[i] = fn(i);
    };
    const unsigned n = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(count, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    return results;
}

}  // namespace vtot::detail
