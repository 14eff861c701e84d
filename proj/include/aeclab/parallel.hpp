#pragma once

// Deterministic work distribution. Results are merged by index, so the
// outcome is independent of the worker count; AECLAB_THREADS only changes
// wall-clock time, never report bytes.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace aeclab {

inline int worker_count() {
    if (const char* env = std::getenv("AECLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, n). f must only write to its own index's slot.
template <typename F>
void parallel_for_index(int n, F&& f) {
    int workers = worker_count();
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = n;
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Maps f over [0, n) into a vector, preserving index order.
template <typename R, typename F>
std::vector<R> parallel_map(int n, F&& f) {
    std::vector<R> out(static_cast<size_t>(n));
    parallel_for_index(n, [&](int i) { out[static_cast<size_t>(i)] = f(i); });
    return out;
}

}  // namespace aeclab
