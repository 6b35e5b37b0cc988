#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilb3 {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Applies fn to every item on a small worker pool; results keep input order.
/// The first exception thrown by any worker is rethrown here.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads)
    -> std::vector<decltype(fn(items.front()))>
{
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    unsigned workers = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(items.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            out[i] = fn(items[i]);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(work);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace hilb3
