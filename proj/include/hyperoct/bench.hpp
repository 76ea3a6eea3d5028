#pragma once

#include <cstdint>

#include "hyperoct/rng.hpp"

namespace hyperoct {

struct ComposeTiming {
  int n = 0;
  int reps = 0;
  double seconds_per_compose = 0.0;
  std::uint64_t checksum = 0;  // keeps the measured loop observable
};

/// Times compose() on random elements of B_n: best-of-three batches of
/// `reps` chained compositions. reps <= 0 picks a rank-dependent default.
ComposeTiming bench_compose(int n, int reps, Rng& rng);

}  // namespace hyperoct
