#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace drinfeld {

namespace detail {
inline std::atomic<unsigned>& jobs_slot()
{
    static std::atomic<unsigned> jobs{0};
    return jobs;
}
}  // namespace detail

/// Worker count used by verification loops. 0 selects hardware concurrency.
inline void set_jobs(unsigned n) { detail::jobs_slot() = n; }

inline unsigned jobs()
{
    const unsigned n = detail::jobs_slot();
    if (n != 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(k, out_k) for k in [0, n) across workers and concatenates the
/// per-k outputs in k order, so results do not depend on scheduling.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t n, Fn&& fn)
{
    std::vector<std::vector<T>> parts(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs(), std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k, parts[k]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t k = next++; k < n; k = next++) fn(k, parts[k]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p) out.push_back(std::move(x));
    return out;
}

}  // namespace drinfeld
