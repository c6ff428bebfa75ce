#include "vss/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace vss {

namespace {
std::atomic<int> g_threads{1};
}

void set_num_threads(int n) { g_threads.store(std::max(1, n)); }

int num_threads() { return g_threads.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    const int workers = std::min<std::size_t>(g_threads.load(), n == 0 ? 1 : n);
    if (workers <= 1 || n < 1024) {
        body(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, w * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin == end) break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace vss
