/**
 * @file parallel.hpp
 * @brief Chunked parallel map with an ordered merge, so results never depend on the worker count.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace symcode {

/// Worker count from SYMCODE_JOBS, or 1.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("SYMCODE_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

/**
 * Evaluates chunk(i) for i in [0, chunks) on up to `jobs` threads and folds the results
 * left-to-right with merge(acc, chunk_result) in index order.
 */
template <class Result, class ChunkFn, class MergeFn>
Result parallel_reduce(std::size_t chunks, unsigned jobs, Result init, ChunkFn chunk, MergeFn merge) {
    std::vector<Result> partial(chunks);
    if (jobs <= 1 || chunks <= 1) {
        for (std::size_t i = 0; i < chunks; ++i) partial[i] = chunk(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= chunks) return;
                try {
                    partial[i] = chunk(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, chunks));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }
    Result acc = std::move(init);
    for (auto& r : partial) merge(acc, std::move(r));
    return acc;
}

}  // namespace symcode
