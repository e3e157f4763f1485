#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spectra {

/// Worker count for data-parallel loops: hardware concurrency capped by the
/// SPECTRA_THREADS environment variable (>=1).
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPECTRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Run fn(i) for i in [0, n). Results must be written to preallocated,
/// disjoint slots so the assembly is deterministic regardless of scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace spectra
