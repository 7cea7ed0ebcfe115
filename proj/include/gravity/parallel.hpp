#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gravity {

// Worker cap: GRAVITY_SS_THREADS when set, else the hardware count.
inline int worker_count() {
    if (const char* env = std::getenv("GRAVITY_SS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..n-1) across workers; tasks must write to disjoint slots.
template <typename F>
void parallel_for(int n, F&& fn) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace gravity
