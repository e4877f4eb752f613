// Copyright meanwidth contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace meanwidth {

// Thread count used by parallel_for. 0 means hardware concurrency.
inline std::atomic<int>& thread_count_setting() {
    static std::atomic<int> v{0};
    return v;
}

inline void set_thread_count(int n) { thread_count_setting().store(n); }

inline int effective_thread_count() {
    int n = thread_count_setting().load();
    if (n > 0) return n;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Parallel loop over [0, n). Each index writes its own output slot, so the
// result is bit-identical for any thread count; any serial reduction over the
// output vector stays deterministic. Exceptions from workers are rethrown.
template <class F>
void parallel_for(std::size_t n, F&& body) {
    int threads = effective_thread_count();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        constexpr std::size_t chunk = 8;
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            std::size_t end = std::min(begin + chunk, n);
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace meanwidth
