#ifndef BOOLPROB_PARALLEL_HPP
#define BOOLPROB_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace boolprob {

// Runs body(0..count-1) on up to `jobs` threads. Callers write results into
// pre-sized slots indexed by i, so output ordering never depends on the
// thread count.
inline void parallel_for(int jobs, int count, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    const int nthreads = std::min(jobs, count);
    workers.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& w : workers) w.join();
}

} // namespace boolprob

#endif
