#ifndef BAZLAB_CORE_PARALLEL_HPP
#define BAZLAB_CORE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace bazlab {

// Thread cap from BAZLAB_THREADS (0 or unset = hardware concurrency).
inline int thread_cap() {
    if (const char* env = std::getenv("BAZLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count) on up to thread_cap() threads, collecting
/// results by index. Callers reduce the returned vector sequentially, so the
/// outcome is identical for every schedule and thread count.
template <typename T>
std::vector<T> parallel_map(size_t count, const std::function<T(size_t)>& fn) {
    std::vector<T> results(count);
    if (count == 0) return results;
    const int threads = std::min<size_t>(thread_cap(), count);
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e); // lowest index wins, schedule-independent
    return results;
}

} // namespace bazlab

#endif
