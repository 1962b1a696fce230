#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace rydsw {

// Chunked parallel loop over [0, count). The body receives disjoint index
// ranges and must only write to slices it owns; results are therefore
// deterministic regardless of the thread count.
template <typename Body>
void parallel_for(int count, int threads, Body&& body) {
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, count));
    if (threads == 1 || count <= 1) {
        body(0, count);
        return;
    }
    const int chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (int k = 0; k < threads; ++k) {
        const int begin = k * chunk;
        const int end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, k, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace rydsw
