// Deterministic parallel helpers. Work is split into contiguous chunks and
// results are combined in chunk order, so the output never depends on
// thread scheduling.
#ifndef ORDEX_PARALLEL_HPP
#define ORDEX_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace ordex {

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::size_t chunk = (count + t - 1) / t;
    for (std::size_t w = 0; w < t; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Folds map(i) into per-chunk accumulators with +=, then adds the chunk
// totals in chunk order. Exact for integer sums.
template <class R, class MapFn>
R parallel_sum(std::size_t count, int threads, R init, MapFn&& map) {
    if (threads <= 1 || count < 2) {
        R acc = init;
        for (std::size_t i = 0; i < count; ++i) acc += map(i);
        return acc;
    }
    const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<R> partial(t, R{});
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::size_t chunk = (count + t - 1) / t;
    for (std::size_t w = 0; w < t; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, w, &partial, &map] {
            R acc{};
            for (std::size_t i = lo; i < hi; ++i) acc += map(i);
            partial[w] = acc;
        });
    }
    for (auto& th : pool) th.join();
    R acc = init;
    for (const R& p : partial) acc += p;
    return acc;
}

}  // namespace ordex

#endif
