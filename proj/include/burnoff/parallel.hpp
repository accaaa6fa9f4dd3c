#ifndef BURNOFF_PARALLEL_HPP
#define BURNOFF_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace burnoff {

/// Thread count actually used for a request: values <= 0 mean "ask the
/// hardware", floored at 1.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into at most `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each, one worker per chunk. Callers merge
/// per-chunk results in chunk order so output never depends on scheduling.
/// The first exception thrown by any chunk is rethrown here.
inline void parallel_chunks(std::size_t total, int threads,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    const int workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(total, 1));
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t base = total / workers, extra = total % workers;
    std::size_t begin = 0;
    for (int i = 0; i < workers; ++i) {
        const std::size_t end = begin + base + (static_cast<std::size_t>(i) < extra ? 1 : 0);
        pool.emplace_back([&, i, begin, end] {
            try {
                fn(i, begin, end);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace burnoff

#endif
