#ifndef CALABI_PARALLEL_HPP
#define CALABI_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace calabi {

/// Worker count: hardware concurrency capped by CALABI_THREADS.
inline int thread_cap() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CALABI_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

/// Runs f(i) for i in [0, n) over contiguous chunks; deterministic results
/// require f to write only to index-i slots.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const int nt = thread_cap();
    if (nt <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace calabi

#endif
