#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace swport::detail {

// Runs fn(i) for every i in [0, count) on up to `workers` threads (the caller
// counts as one).  Work is split into contiguous index blocks, so the mapping
// from index to thread is deterministic; fn must only write state owned by
// its own index.  The first exception thrown by any invocation is rethrown
// on the caller after all threads join.
inline void parallel_for(std::size_t count, std::size_t workers,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const std::size_t n_threads = std::min(workers, count);
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_block = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t i = begin; i < end; ++i)
                fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n_threads - 1);
    const std::size_t chunk = (count + n_threads - 1) / n_threads;
    for (std::size_t t = 1; t < n_threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin < end)
            pool.emplace_back(run_block, begin, end);
    }
    run_block(0, std::min(count, chunk));
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace swport::detail
