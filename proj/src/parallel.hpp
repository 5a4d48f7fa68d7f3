#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace forestmask::detail {

// Runs fn(row_begin, row_end) over disjoint row ranges. Callers only write to
// rows inside their range, so the result is independent of scheduling.
template <typename Fn>
void parallel_rows(int height, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::max(1, static_cast<int>(hw));
    if (height < 128 || workers == 1) {
        fn(0, height);
        return;
    }
    workers = std::min(workers, height);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    int chunk = (height + workers - 1) / workers;
    for (int begin = 0; begin < height; begin += chunk) {
        int end = std::min(begin + chunk, height);
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace forestmask::detail
