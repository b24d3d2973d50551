#ifndef MAXLAYERS_PARALLEL_HPP
#define MAXLAYERS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace maxlayers::detail {

// Runs body(i) for i in [0, count) on a few threads. Callers write results
// into slot i and reduce afterwards, so the outcome does not depend on
// scheduling.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    auto const workers = std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        next = count;
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace maxlayers::detail

#endif
