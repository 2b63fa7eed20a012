#include "skipcorr/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace skipcorr {

namespace {

// Nested parallel_for calls (a pair bootstrap inside a replication loop)
// run serially on the worker that reached them.
thread_local bool inside_parallel_region = false;

} // namespace

std::size_t worker_count() {
    static const std::size_t cached = [] {
        if (const char* env = std::getenv("SKIPCORR_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1)
                return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1);
    }();
    return cached;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn) {
    if (end <= begin)
        return;
    const std::size_t span = end - begin;
    std::size_t workers = inside_parallel_region ? 1 : worker_count();
    if (workers > span)
        workers = span;

    if (workers == 1) {
        for (std::size_t i = begin; i < end; ++i)
            fn(i);
        return;
    }

    const std::size_t block = span / workers;
    const std::size_t extra = span % workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    std::size_t lo = begin;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t hi = lo + block + (w < extra ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] {
            inside_parallel_region = true;
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace skipcorr
