#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace dioph {

// Splits [begin, end) into `workers` contiguous chunks, runs `fn(chunk_begin,
// chunk_end, result&)` on each, and concatenates the per-chunk results in
// chunk order.  Output is therefore independent of the worker count.
template <typename T, typename Fn>
std::vector<T> parallel_chunks(long long begin, long long end, unsigned workers, Fn fn) {
    if (workers == 0) workers = 1;
    long long total = end - begin;
    if (total <= 0) return {};
    unsigned used = static_cast<unsigned>(
        std::min<long long>(workers, std::max<long long>(1, total)));
    std::vector<std::vector<T>> parts(used);
    std::vector<std::thread> threads;
    long long chunk = (total + used - 1) / used;
    for (unsigned w = 0; w < used; ++w) {
        long long lo = begin + chunk * w;
        long long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, w, lo, hi] { fn(lo, hi, parts[w]); });
    }
    for (auto& t : threads) t.join();
    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline std::atomic<unsigned>& parallelism_setting() {
    static std::atomic<unsigned> v{1};
    return v;
}

inline unsigned default_parallelism() { return parallelism_setting().load(); }

inline void set_default_parallelism(unsigned workers) {
    parallelism_setting().store(workers == 0 ? 1 : workers);
}

}  // namespace dioph
