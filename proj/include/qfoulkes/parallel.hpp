#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qfoulkes {

/// Applies f to every item on `jobs` threads and returns the results in
/// input order.  The first exception thrown by any worker is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& f)
    -> std::vector<std::invoke_result_t<F&, const T&>>
{
    using R = std::invoke_result_t<F&, const T&>;
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size())
                return;
            try {
                slots[i].emplace(f(items[i]));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(items.size());
                return;
            }
        }
    };

    const std::size_t threads = std::min<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), items.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace qfoulkes
