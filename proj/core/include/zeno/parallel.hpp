#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace zeno {

/// Worker count used when a sweep is asked for 0 workers.
inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1U : hw;
}

/**
 Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
 the results in index order. If any call throws, the exception from the
 lowest failing index is rethrown after all workers join, so the outcome
 does not depend on scheduling.
 */
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
    std::vector<Result> out(count);
    std::vector<std::exception_ptr> errors(count);
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace zeno
