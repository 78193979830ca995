#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pvu {

// Thread count: PVUDF_THREADS env override, else hardware concurrency.
inline int thread_count() {
    static const int n = [] {
        if (const char* env = std::getenv("PVUDF_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? int(hw) : 1;
    }();
    return n;
}

// Chunked parallel loop. Chunk boundaries depend only on (n, chunk), and each
// chunk writes disjoint state, so results are identical for any worker count.
inline void parallel_for_chunks(std::size_t n, std::size_t chunk,
                                const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    const int workers = std::min<std::size_t>(thread_count(), nchunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            body(c * chunk, std::min(n, (c + 1) * chunk));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            body(c * chunk, std::min(n, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace pvu
