#pragma once

#include "ambigine/rational.hpp"

#include <cstdint>

namespace ambigine {

// SplitMix64: counter-based, splittable, identical across platforms. Used
// everywhere a seeded stream is part of the interface contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0; modulo bias is irrelevant at our sizes.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // Exact Bernoulli draw for a rational p in [0, 1]: compares the uniform
  // 64-bit draw against p * 2^64 in integers.
  bool bernoulli(const Rat& p) {
    const std::uint64_t u = next();
    const BigInt lhs = BigInt(u) * denominator(p);
    const BigInt rhs = numerator(p) << 64;
    return lhs < rhs;
  }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace ambigine
