#include "mqpsh/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace mqpsh {

int worker_count() {
    static const int cap = [] {
        const char* env = std::getenv("MQPSH_THREADS");
        int requested = 0;
        if (env) requested = std::atoi(env);
        if (requested <= 0) requested = static_cast<int>(std::thread::hardware_concurrency());
        return requested > 0 ? requested : 1;
    }();
    return cap;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || n < 4096) {
        fn(0, n);
        return;
    }
    const std::size_t chunks = static_cast<std::size_t>(workers);
    const std::size_t step = (n + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * step;
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + step);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mqpsh
