#include "bnloci/grid.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace bnloci {

std::vector<Rat> farey_range(const Rat& lo, const Rat& hi, std::int64_t max_den, bool lo_open, bool hi_open) {
  std::vector<Rat> out;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const std::int64_t a = (lo * Rat(q)).ceil().to_int64();
    const std::int64_t b = (hi * Rat(q)).floor().to_int64();
    for (std::int64_t p = a; p <= b; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  if (lo_open && !out.empty() && out.front() == lo) out.erase(out.begin());
  if (hi_open && !out.empty() && out.back() == hi) out.pop_back();
  return out;
}

std::vector<Rat> merge_sorted(std::vector<Rat> a, const std::vector<Rat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

unsigned thread_count() {
  if (const char* env = std::getenv("BN_LOCUS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace bnloci
