#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "hypermoment/common.hpp"

namespace hypermoment {

/// Worker width: explicit request, else HYPERMOMENT_THREADS, else hardware.
inline int thread_width(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERMOMENT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs f(i) for i in [0, n) across up to `width` threads.  Jobs must be
/// independent; results should be written to pre-sized slots so ordering
/// stays deterministic.
template <typename F>
void parallel_for(i64 n, F&& f, int width = 0) {
    width = thread_width(width);
    if (width <= 1 || n <= 1) {
        for (i64 i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<i64> next(0);
    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(std::min<i64>(width, n));
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            for (i64 i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace hypermoment
