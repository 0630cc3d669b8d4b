#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zenobath {

// Runs fn(0..n-1) on up to `jobs` threads. Work items are independent and
// write to caller-owned slots, so results are identical to the serial order
// regardless of scheduling. The first exception wins and is rethrown.
inline void parallel_for_indexed(std::size_t n, unsigned jobs,
                                 const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (jobs <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) threads.emplace_back(body);
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace zenobath
