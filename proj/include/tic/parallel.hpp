#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace tic {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc != 0 ? hc : 1;
}

// Runs fn(chunk, begin, end) over a partition of [0, n) with one chunk per
// worker.  Chunk boundaries depend only on (n, jobs), so a caller that merges
// per-chunk results in chunk order gets output independent of scheduling.
template <class Fn>
void parallel_chunks(uint64_t n, unsigned jobs, Fn&& fn) {
  unsigned nthreads = resolve_jobs(jobs);
  if (nthreads > n) nthreads = n != 0 ? static_cast<unsigned>(n) : 1;
  if (nthreads <= 1) {
    fn(0u, uint64_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errs(nthreads);
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (unsigned c = 0; c < nthreads; ++c) {
    uint64_t lo = n * c / nthreads;
    uint64_t hi = n * (c + 1) / nthreads;
    workers.emplace_back([&fn, &errs, c, lo, hi] {
      try {
        fn(c, lo, hi);
      } catch (...) {
        errs[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace tic
