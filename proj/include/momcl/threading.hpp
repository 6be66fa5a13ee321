#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace momcl {

/// Resolve a user thread-count request: 0 means auto.
[[nodiscard]] inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(i) for i in [0, n) over a fixed contiguous partition.  Each index
/// is processed exactly once and writes only its own slot, so results are
/// bit-identical for every thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    const std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::vector<std::exception_ptr> errs(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(n, b + chunk);
            try {
                for (std::size_t i = b; i < e; ++i) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace momcl
