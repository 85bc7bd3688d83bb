#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace srg {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work items
/// are claimed from a shared counter; callers write results into slot i so
/// that output order never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body && body)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto & t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace srg
