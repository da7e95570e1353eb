#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "tanglekit/limits.hpp"

namespace tanglekit {

// Runs fn(i) for i in [0, count) across workers. Results must be written into
// pre-sized per-index slots by the caller, so the merge is order-independent
// and the outcome matches a sequential run.
template <typename Fn>
void parallel_for_index(std::int64_t count, Fn&& fn) {
    int workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (workers > count) workers = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::int64_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace tanglekit
