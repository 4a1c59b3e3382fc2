#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

// Deterministic work distribution. Items are mapped into preassigned slots
// and reduced serially afterwards, so results never depend on the worker
// count or on scheduling order.

namespace morreylab {

inline int default_worker_count() {
    if (const char* env = std::getenv("MORREYLAB_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, n). fn must write only to per-index state.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, int workers = 0) {
    if (workers <= 0) workers = default_worker_count();
    if (n <= 0) return;
    if (workers == 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    // Chunked dynamic scheduling; chunk size keeps contention low while
    // balancing uneven per-item cost (e.g. paths that exit early).
    const std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * workers));
    auto worker = [&] {
        for (;;) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(n, begin + chunk);
            for (std::int64_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

// Splits [0, n) into contiguous ranges, one call per range. Useful when the
// body wants to amortize setup (e.g. grid slabs).
template <typename Fn>
void parallel_ranges(std::int64_t n, Fn&& fn, int workers = 0) {
    if (workers <= 0) workers = default_worker_count();
    if (n <= 0) return;
    workers = static_cast<int>(std::min<std::int64_t>(workers, n));
    if (workers == 1) {
        fn(std::int64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t per = n / workers, extra = n % workers;
    std::int64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t len = per + (w < extra ? 1 : 0);
        pool.emplace_back([&fn, begin, len] { fn(begin, begin + len); });
        begin += len;
    }
    for (auto& t : pool) t.join();
}

} // namespace morreylab
