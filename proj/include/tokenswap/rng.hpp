#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tokenswap {

// Reproducible randomness for generators. The stream is pinned to
// std::mt19937_64 (whose output is specified bit-for-bit by the C++
// standard) plus our own bounded-draw and shuffle below, so the same
// seed yields the same instance on every platform. Standard-library
// distributions are deliberately avoided: their outputs vary between
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw in [lo, hi], rejection sampling over the top range.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;  // hi >= lo; span == 0 means the full 2^64 range
    if (span == 0) return engine_();
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return lo + x % span;
    }
  }

  std::int64_t uniform_i64(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
  }

  // Fisher-Yates; draw order is part of the pinned stream.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(0, i - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tokenswap
