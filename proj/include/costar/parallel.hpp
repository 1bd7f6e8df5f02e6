#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace costar {

/// Worker count from COSTAR_WORKERS, else the hardware concurrency (min 1).
unsigned default_workers();

/// Runs body(index, worker) for every index in [0, count) on up to `workers`
/// threads. Indices are claimed dynamically; the first exception thrown by a
/// body is rethrown on the calling thread after all workers stop.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    if (count == 0) return;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&](unsigned worker) {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                body(i, worker);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(threads - 1);
        for (unsigned w = 1; w < threads; ++w) pool.emplace_back(run, w);
        run(0);
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace costar
