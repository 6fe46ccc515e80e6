#include "netfex/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace netfex {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_chunks(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t, int)>& chunk_fn) {
    if (n == 0) return;
    int workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), n);
    if (workers <= 1) {
        chunk_fn(0, n, 0);
        return;
    }
    std::size_t base = n / workers;
    std::size_t extra = n % workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::size_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        std::size_t len = base + (static_cast<std::size_t>(w) < extra ? 1 : 0);
        std::size_t end = begin + len;
        pool.emplace_back([&, begin, end, w] {
            try {
                chunk_fn(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace netfex
