#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "bnloci/rational.hpp"

namespace bnloci {

/// All rationals in [lo, hi] with denominator at most max_den, ascending.
/// Open ends drop the endpoint itself.
std::vector<Rat> farey_range(const Rat& lo, const Rat& hi, std::int64_t max_den, bool lo_open = false,
                             bool hi_open = false);

/// Sorted union without duplicates.
std::vector<Rat> merge_sorted(std::vector<Rat> a, const std::vector<Rat>& b);

/// Worker count: BN_LOCUS_THREADS when set and positive, else the hardware
/// concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bnloci
