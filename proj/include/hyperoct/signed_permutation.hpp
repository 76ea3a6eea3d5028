#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/errors.hpp"
#include "hyperoct/rng.hpp"

namespace hyperoct {

/// Element of the hyperoctahedral group B_n, held in window (one-line)
/// notation: window()[i-1] = pi(i) for i = 1..n, entries signed, absolute
/// values a permutation of 1..n. The action extends to negative arguments
/// through pi(-i) = -pi(i), so the window determines the whole map.
///
/// Composition convention: the leftmost factor acts first, i.e.
/// compose(a, b) sends i to b(a(i)). All protocol algebra in this library
/// relies on that orientation.
///
/// Instances are immutable once constructed and safe to share across
/// threads.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);

  /// Validates and adopts a window; rank is the window length.
  /// Throws ZeroEntry or NotAPermutation on invalid input.
  static SignedPermutation from_window(std::vector<std::int32_t> window);

  /// Same, but checks the length against an expected rank first
  /// (RankMismatch).
  static SignedPermutation from_window(int n, std::vector<std::int32_t> window);

  /// Adopts a window the caller guarantees to be valid. Internal fast path
  /// for operations whose output is valid by construction.
  static SignedPermutation from_window_unchecked(std::vector<std::int32_t> window);

  int rank() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<std::int32_t>& window() const noexcept { return window_; }

  /// Image of i for i in {-n,..,-1, 1,..,n}; image(-i) == -image(i).
  std::int32_t image(std::int32_t i) const;

  bool is_identity() const noexcept;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  explicit SignedPermutation(std::vector<std::int32_t> w) : window_(std::move(w)) {}

  std::vector<std::int32_t> window_;
};

/// One cycle of a signed permutation: the parent maps
/// support[j] to signs[j] * support[(j+1) mod length]. The support starts at
/// its minimal element.
struct SignedCycle {
  std::vector<std::int32_t> support;
  std::vector<std::int8_t> signs;

  std::size_t length() const noexcept { return support.size(); }

  /// Product of the step signs: +1 or -1.
  int sign() const noexcept;

  /// Order of the cycle as a group element: length when the sign product is
  /// +1; twice the length when it is -1, because traversing a negative cycle
  /// once lands on the negated support, not on the start.
  std::uint64_t element_order() const noexcept;

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// c = compose(a, b) maps i to b(a(i)); a acts first.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation inverse(const SignedPermutation& a);

/// a^e by binary square-and-multiply; e >= 0, may exceed word size.
SignedPermutation power(const SignedPermutation& a, const BigInt& e);

/// Disjoint cycles covering 1..n (fixed points appear as 1-cycles), each
/// starting at its minimal support element, sorted by that element.
std::vector<SignedCycle> cycle_decompose(const SignedPermutation& a);

/// Rebuilds the element of B_n with the given disjoint cycles; positions not
/// covered by any support stay fixed with positive sign.
SignedPermutation recompose(int n, const std::vector<SignedCycle>& cycles);

/// Least m >= 1 with a^m = identity: lcm of the cycle element orders.
BigInt order(const SignedPermutation& a);

/// Uniform draw over all 2^n * n! elements: unsigned Fisher-Yates shuffle
/// plus an independent fair sign per position.
SignedPermutation random_element(int n, Rng& rng);

/// |B_n| = 2^n * n!.
BigInt group_cardinality(int n);

/// Space-separated signed decimal window, e.g. "3 -6 2".
std::string to_string(const SignedPermutation& a);
std::vector<std::int32_t> parse_window(const std::string& text);

std::ostream& operator<<(std::ostream& out, const SignedPermutation& a);

}  // namespace hyperoct
