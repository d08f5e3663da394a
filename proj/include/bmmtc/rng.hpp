#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace bmmtc {

// SplitMix64 (Steele, Lea & Flood 2014), fixed-increment variant as published
// by Vigna. Chosen because the whole stream is defined by 64-bit integer
// arithmetic, so any language can reproduce it exactly.
struct SplitMix64 {
  std::uint64_t state = 0;

  constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1): top 53 bits scaled by 2^-53 (exact in IEEE754).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Substream i of a master seed: the first output of SplitMix64 seeded with
/// master XOR (i+1)*0x9E3779B97F4A7C15. Substreams are independent of the
/// order in which they are instantiated, so per-row and per-trial generation
/// parallelizes without changing results.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
  return g.next();
}

/// Runs fn(i) for i in [0,count). With threads > 1 the index range is split
/// into contiguous chunks; fn must only write to per-index slots.
template <typename Fn>
void parallel_for_index(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t nthreads = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace bmmtc
