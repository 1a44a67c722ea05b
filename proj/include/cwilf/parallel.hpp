#pragma once

#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "cwilf/bigint.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf {

/// Owned by the caller (normally the CLI) and passed down into every
/// enumeration. Results must be independent of the thread count; the
/// helpers below guarantee that by combining per-chunk accumulators in
/// chunk order.
struct ParallelContext {
    int threads = 1;

    static ParallelContext sequential() { return ParallelContext{1}; }
    static ParallelContext hardware() {
        unsigned hc = std::thread::hardware_concurrency();
        return ParallelContext{hc == 0 ? 1 : static_cast<int>(hc)};
    }
};

/// Map-reduce over S_n split by lexicographic rank. Acc must be default
/// constructible; `fold(acc, word)` absorbs one permutation and
/// `merge(into, from)` combines chunk accumulators. Aggregation must be
/// commutative-monoid style for thread-count independence; merge order
/// is fixed to chunk order anyway.
template <class Acc, class Fold, class Merge>
Acc sn_map_reduce(int n, const ParallelContext& par, Fold fold, Merge merge) {
    const Int total_big = factorial(n);
    const uint64_t total = static_cast<uint64_t>(total_big);
    const int want = par.threads < 1 ? 1 : par.threads;
    if (want == 1 || total < 4096 || n == 0) {
        Acc acc{};
        for_each_in_sn(n, 0, total, [&](std::span<const int> w) { fold(acc, w); });
        return acc;
    }
    const uint64_t nchunks = static_cast<uint64_t>(want);
    std::vector<Acc> parts(nchunks);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    for (uint64_t c = 0; c < nchunks; ++c) {
        const uint64_t lo = total * c / nchunks;
        const uint64_t hi = total * (c + 1) / nchunks;
        workers.emplace_back([&, c, lo, hi] {
            for_each_in_sn(n, lo, hi, [&](std::span<const int> w) { fold(parts[c], w); });
        });
    }
    for (auto& t : workers) t.join();
    Acc acc = std::move(parts[0]);
    for (uint64_t c = 1; c < nchunks; ++c) merge(acc, parts[c]);
    return acc;
}

} // namespace cwilf
