#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace pslp {

// Deterministic chunked map: the item range is split into fixed-size chunks
// (independent of the thread count), each chunk produces a partial result,
// and the partials come back in chunk order.  Callers reduce sequentially
// over the returned vector, so `threads = 1` and `threads = 8` give
// bit-identical results.
//
// fn(first, last) -> T, over [first, last).
template <class T, class Fn>
std::vector<T> run_chunked(std::size_t n_items, std::size_t chunk_size,
                           unsigned threads, Fn&& fn) {
    if (chunk_size == 0) chunk_size = 1;
    std::size_t n_chunks = (n_items + chunk_size - 1) / chunk_size;
    std::vector<T> parts(n_chunks);
    if (n_chunks == 0) return parts;

    auto run_chunk = [&](std::size_t ci) {
        std::size_t first = ci * chunk_size;
        std::size_t last = std::min(first + chunk_size, n_items);
        parts[ci] = fn(first, last);
    };

    if (threads <= 1 || n_chunks == 1) {
        for (std::size_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
        return parts;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t ci = next.fetch_add(1);
            if (ci >= n_chunks) break;
            run_chunk(ci);
        }
    };
    unsigned n_workers = std::min<std::size_t>(threads, n_chunks);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return parts;
}

} // namespace pslp
