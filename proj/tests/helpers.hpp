#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

// Independent enumeration and brute-force oracles shared by the test suites.
// These stay deliberately naive; they arbitrate what the library computes.
namespace testutil {

inline std::vector<std::vector<std::int32_t>> all_unsigned_windows(int n) {
  std::vector<std::int32_t> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<std::int32_t>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<std::vector<std::int32_t>> all_signed_windows(int n) {
  std::vector<std::vector<std::int32_t>> out;
  for (const auto& base : all_unsigned_windows(n)) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      auto w = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      out.push_back(std::move(w));
    }
  }
  return out;
}

// least m in [1, cap] with pi^m = identity, by repeated composition; 0 if none
inline std::uint64_t brute_force_order(const hyperoct::SignedPermutation& pi, std::uint64_t cap) {
  auto cur = pi;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (cur.is_identity()) return m;
    cur = hyperoct::compose(cur, pi);
  }
  return 0;
}

}  // namespace testutil
