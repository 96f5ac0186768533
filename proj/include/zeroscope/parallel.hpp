#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace zeroscope::detail {

// Index-parallel loop over [0, n).  Each index writes only its own slot, so
// results are identical to the serial loop regardless of thread count.
template <typename F>
void parallel_for(std::size_t n, F&& body, unsigned max_threads = 0) {
    unsigned hw = max_threads ? max_threads : std::thread::hardware_concurrency();
    if (hw < 2 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace zeroscope::detail
