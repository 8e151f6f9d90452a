/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef TTPACK_GUARD_PARALLEL_HH
#define TTPACK_GUARD_PARALLEL_HH 1

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ttpack
{
    /**
     * Runs body(i) for every i in [0, count) on up to `workers` threads.
     * Work is handed out dynamically, so callers must write results into
     * per-index slots to stay scheduling independent. The first exception
     * thrown by any body is rethrown on the calling thread.
     */
    template <typename Body_>
    auto parallel_for(std::size_t count, unsigned workers, Body_ && body) -> void
    {
        workers = std::max(1u, workers);
        if (workers == 1 || count <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{ 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto run = [&] {
            for (std::size_t i = next++ ; i < count ; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> guard(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        std::vector<std::thread> threads;
        for (unsigned w = 0 ; w < std::min<std::size_t>(workers, count) ; ++w)
            threads.emplace_back(run);
        for (auto & t : threads)
            t.join();

        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
