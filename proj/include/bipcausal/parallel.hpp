#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bipcausal {

/// Runs fn(0..count-1) on up to `workers` threads (0 = hardware default).
/// Callers write results into pre-sized slots indexed by i, which keeps
/// output deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
    if (count == 0) return;
    std::size_t n = workers ? workers : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    n = std::min(n, count);
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace bipcausal
