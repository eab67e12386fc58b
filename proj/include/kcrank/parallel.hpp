#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace kcrank {

/// Run body(i) for i in [begin, end) across at most `jobs` threads. Bodies
/// must write to disjoint slots; the schedule never affects the result, so
/// jobs == 1 and jobs > 1 produce identical output.
template <typename F>
void parallel_for(int begin, int end, int jobs, F&& body) {
    if (end <= begin) return;
    if (jobs <= 1 || end - begin == 1) {
        for (int i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<int> next{begin};
    int nthreads = std::min(jobs, end - begin);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace kcrank
