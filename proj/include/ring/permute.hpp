#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ring {

// Deterministic 64-bit generator: xorshift64* state update
//   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; out = x * 0x2545F4914F6CDD1D
// seeded through one splitmix64 step so that any seed (including 0) yields a
// valid nonzero state. Same seed, same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    state_ = z != 0 ? z : 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
  std::uint64_t rand_range(std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + v % span;
  }

 private:
  std::uint64_t state_;
};

// Random permutation by repeatedly popping a uniformly chosen element from
// the pool. Each pick is prepended to the output, so the returned order is
// the reverse of pop order.
template <class T>
std::vector<T> permute(std::vector<T> items, Rng& rng) {
  std::vector<T> pool = std::move(items);
  std::vector<T> picked;
  const std::size_t count = pool.size();
  picked.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    assert(!pool.empty() && "pop empty list");
    const auto index =
        static_cast<std::size_t>(rng.rand_range(0, pool.size() - 1));
    picked.push_back(std::move(pool[index]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

}  // namespace ring
