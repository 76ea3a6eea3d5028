#pragma once

#include <cstdint>
#include <random>

#include "hyperoct/bigint.hpp"

namespace hyperoct {

/// Seedable randomness source. All sampling goes through rejection from raw
/// engine words, so a given seed produces the same draws on every platform
/// (mt19937_64 output is fully specified by the standard, distributions are
/// not). Not thread-safe; use one instance per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  bool coin() { return (engine_() & 1u) != 0; }

  /// Uniform draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform draw from [0, bound); bound must be positive.
  BigInt below(const BigInt& bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperoct
