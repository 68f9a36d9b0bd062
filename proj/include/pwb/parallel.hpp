#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace pwb {

// Runs fn(n) for every n in [0, n_max] across `workers` threads and returns
// the results indexed by n. fn must be pure; the merge is by index, so the
// outcome does not depend on scheduling. Work is handed out largest-n-first
// since the cost of everything here grows with n.
template <typename Fn>
auto map_over_n(std::int64_t n_max, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::int64_t>> {
    using R = std::invoke_result_t<Fn&, std::int64_t>;
    std::vector<R> results(static_cast<std::size_t>(n_max) + 1);
    if (workers <= 1) {
        for (std::int64_t n = 0; n <= n_max; ++n)
            results[static_cast<std::size_t>(n)] = fn(n);
        return results;
    }
    std::atomic<std::int64_t> counter{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&] {
        for (;;) {
            std::int64_t i = counter.fetch_add(1);
            if (i > n_max || failed.load())
                return;
            std::int64_t n = n_max - i;
            try {
                results[static_cast<std::size_t>(n)] = fn(n);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(workers,
                                        static_cast<unsigned>(n_max + 1));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (failed.load())
        std::rethrow_exception(error);
    return results;
}

// Worker-count resolution: the WORKBENCH_WORKERS environment variable
// overrides the requested value; 0 means "use available parallelism".
inline unsigned resolve_workers(unsigned requested) {
    if (const char* env = std::getenv("WORKBENCH_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace pwb
