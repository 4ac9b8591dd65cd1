#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gl2 {

/// Apply fn(i) for i in [0, count) across `workers` threads. Results land in
/// a slot per index, so output is independent of the worker count.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int workers, Fn&& fn) {
    std::vector<T> out(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<std::size_t>(workers, count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace gl2
