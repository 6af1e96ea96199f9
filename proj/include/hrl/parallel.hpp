#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hrl {

/// Worker count for a requested shard count, capped by HRL_THREADS when set.
std::size_t worker_count(std::size_t requested);

/// Runs task(i) for i in [0, count) on up to `workers` threads, handing out
/// indices in increasing order. The first exception thrown by any task is
/// rethrown after all workers stop.
template <typename Task>
void parallel_for(std::size_t count, std::size_t workers, Task && task)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back(body);
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace hrl
