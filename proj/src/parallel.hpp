#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace centrum::detail {

// Runs fn(begin, end) over disjoint chunks of [0, n). Falls back to a single
// call for small n, where thread startup would dominate.
inline void parallel_chunks(int n, const std::function<void(int, int)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || n < 256) {
        fn(0, n);
        return;
    }
    int nthreads = std::min<int>(hw, (n + 255) / 256);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    int chunk = (n + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        int lo = t * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace centrum::detail
