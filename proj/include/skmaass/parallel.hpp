#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace skmaass {

// Runs fn(i) for every i in [0, count). Each call must write only to its own
// output slot; callers perform reductions afterwards in index order, so the
// result is identical for any number of jobs.
inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(jobs, std::max<std::size_t>(count / 2, 1));
    // Block scheduling keeps per-item overhead low when items are cheap.
    const std::size_t block = std::max<std::size_t>(count / (workers * 8), 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(block);
            if (begin >= count) break;
            const std::size_t end = std::min(begin + block, count);
            for (std::size_t i = begin; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace skmaass
