#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/rng.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Recipe for a base element with controlled order smoothness: one p-cycle
/// plus extra cycles of the given lengths, all on disjoint random supports.
/// Feasibility: p prime, 1 <= l_i <= p, and p + sum(l_i) <= n. With all
/// cycle signs positive the order is exactly lcm(p, l_1, ..., l_k), which is
/// p-smooth but not (p-1)-smooth.
struct BaseSpec {
  int n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> lengths;
  /// Optional per-cycle sign (+1/-1); entry 0 is the p-cycle. A negative
  /// cycle doubles that cycle's order (still p-smooth for p >= 2).
  std::optional<std::vector<int>> signs;
};

/// Parses the CLI spec string "n=<int>,p=<int>,lengths=<l1+l2+...>"
/// (the lengths part may be absent or empty).
BaseSpec parse_base_spec(const std::string& text);

/// Builds the element described by spec on randomly drawn supports.
/// Throws NotPrime or SpecInfeasible.
SignedPermutation construct_base(const BaseSpec& spec, Rng& rng);

/// Deterministic trial division; intended for cycle-scale arguments.
bool is_prime(std::uint64_t p);

/// True iff every prime factor of value is <= bound (value >= 1).
bool is_b_smooth(const BigInt& value, std::uint64_t bound);

/// Exact factorization of order(pi). Cycle orders only involve primes up to
/// the rank (and 2), so trial division suffices.
Factorization factor_order(const SignedPermutation& pi);

/// "p1^e1 p2 p3^e3 ..." with unit exponents omitted; empty for order 1.
std::string factors_to_string(const Factorization& factors);

/// Maximum of order(pi) over all of B_n: the Landau-function analogue with
/// the sign-doubling rule, computed by dynamic programming over prime-power
/// cycle lengths. Reports the largest cyclic-subgroup size available at a
/// given rank.
BigInt max_achievable_order(int n);

}  // namespace hyperoct
