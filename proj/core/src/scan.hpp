// Internal sharded word-space scanning. The shard partition depends only on
// the word length, never on the thread count, and callers reduce shard
// results in index order; scheduling therefore cannot influence any output.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace fbw::harness::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline std::size_t shard_count_for(std::size_t n) {
    return std::size_t{1} << std::min<std::size_t>(n, 8);
}

struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

inline IndexRange shard_range(std::size_t n, std::size_t shard) {
    const std::uint64_t span = (std::uint64_t{1} << n) / shard_count_for(n);
    return IndexRange{shard * span, (shard + 1) * span};
}

// Runs fn(shard) for every shard index in [0, shard_count) on up to
// `threads` workers; results are returned indexed by shard.
template <class Fn>
auto run_shards(std::size_t shard_count, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> results(shard_count);
    const std::size_t workers =
        std::min<std::size_t>(resolve_threads(threads), shard_count);
    if (workers <= 1) {
        for (std::size_t s = 0; s < shard_count; ++s) results[s] = fn(s);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto pump = [&] {
        for (std::size_t s = next.fetch_add(1); s < shard_count;
             s = next.fetch_add(1))
            results[s] = fn(s);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(pump);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace fbw::harness::detail
