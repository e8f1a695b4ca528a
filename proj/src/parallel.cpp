#include "tempsub/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace tempsub {

int resolve_threads(int request) {
    if (request > 0) return request;
    if (const char* env = std::getenv("TEMPSUB_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    const int t = threads > 0 ? threads : resolve_threads();
    if (t == 1 || n == 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int c = 0; c < t; ++c) {
        const std::int64_t begin = n * c / t;
        const std::int64_t end = n * (c + 1) / t;
        if (begin == end) continue;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace tempsub
