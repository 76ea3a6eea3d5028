#include "hyperoct/bench.hpp"

#include <algorithm>
#include <chrono>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

ComposeTiming bench_compose(int n, int reps, Rng& rng) {
#if defined(__GLIBC__)
  // keep multi-megabyte windows on the heap instead of fresh mmap regions,
  // otherwise page faults dominate the measurement at large ranks
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
#endif
  if (reps <= 0) reps = static_cast<int>(std::clamp<long long>(20'000'000LL / n, 5LL, 1000LL));

  ComposeTiming timing;
  timing.n = n;
  timing.reps = reps;

  const auto a = random_element(n, rng);
  const auto b = random_element(n, rng);
  auto chained = compose(a, b);  // warm-up; also the loop carrier

  double best = -1.0;
  for (int batch = 0; batch < 3; ++batch) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
      chained = compose(chained, b);
      timing.checksum ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(chained.window()[0]));
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const double per_op = elapsed.count() / reps;
    if (best < 0.0 || per_op < best) best = per_op;
  }
  timing.seconds_per_compose = best;
  return timing;
}

}  // namespace hyperoct
