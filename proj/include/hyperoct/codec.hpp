#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Digits of the hyperoctahedral number system: place value of position i is
/// B_i = 2^i * i!, digit range 0..2i+1. Stored little-endian (d_0 first);
/// the display format is most-significant-first with ':' separators.
struct HyperoctDigits {
  std::vector<std::uint64_t> digits;

  /// Validates the per-position digit range (DigitOutOfRange).
  static HyperoctDigits from_digits(std::vector<std::uint64_t> digits);

  std::size_t size() const noexcept { return digits.size(); }

  /// Drops non-significant high-position zeros; the value 0 keeps one digit.
  HyperoctDigits canonical() const;

  friend bool operator==(const HyperoctDigits&, const HyperoctDigits&) = default;
};

/// Word f(1)..f(n) with 1 <= f(i) <= i. There are n! of these for rank n.
struct SubexceedantFunction {
  std::vector<std::int32_t> f;

  /// Validates the subexceedance bounds (ValueOutOfRange).
  static SubexceedantFunction from_word(std::vector<std::int32_t> f);

  std::size_t size() const noexcept { return f.size(); }

  friend bool operator==(const SubexceedantFunction&, const SubexceedantFunction&) = default;
};

/// Per-position signs (+1/-1) of a signed permutation window.
struct SignVector {
  std::vector<std::int8_t> signs;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Greedy remainder cascade: divide by 2, then 4, then 6, ... until the
/// quotient vanishes. Always returns the canonical digit string.
HyperoctDigits int_to_digits(const BigInt& value);

/// Horner-style evaluation d -> d*2i + d_{i-1}; exact inverse of
/// int_to_digits on canonical input. Throws DigitOutOfRange.
BigInt digits_to_int(const HyperoctDigits& d);

std::string digits_to_string(const HyperoctDigits& d);
HyperoctDigits digits_from_string(const std::string& text);

/// The bijection f -> (1 f(1))(2 f(2))...(n f(n)) from subexceedant
/// functions onto S_n, transpositions composed leftmost-first; factors with
/// f(i) = i are identity factors. Output is an all-positive element and
/// satisfies sigma(n) = f(n).
SignedPermutation subexceedant_to_perm(const SubexceedantFunction& f);

/// Inverse of subexceedant_to_perm: peel f(i) = sigma_i(i) from i = n down,
/// each step multiplying on the right by the transposition (i sigma_i(i)).
/// Requires an all-positive window (SignedInput).
SubexceedantFunction perm_to_subexceedant(const SignedPermutation& sigma);

/// Digit split d_i = 2*q_i + r_i: f(i+1) = q_i + 1 and sign_{i+1} = (-1)^{r_i}.
/// Digits beyond the stored ones count as zero; more than n significant
/// digits is TooManyDigits.
std::pair<SubexceedantFunction, SignVector> split_digits(const HyperoctDigits& d, int n);

/// Inverse of split_digits; emits exactly n digits (high zeros included).
HyperoctDigits merge_digits(const SubexceedantFunction& f, const SignVector& eps);

/// Full digit-to-element map: window[i-1] = sign_i * sigma_f(i).
SignedPermutation digits_to_signed_perm(const HyperoctDigits& d, int n);
HyperoctDigits signed_perm_to_digits(const SignedPermutation& pi);

/// The composed bijection {0,..,B_n - 1} <-> B_n at fixed rank n.
/// int_to_signed_perm throws ValueOutOfRange when value is negative or
/// >= B_n.
SignedPermutation int_to_signed_perm(const BigInt& value, int n);
BigInt signed_perm_to_int(const SignedPermutation& pi);

/// Largest block size s (bytes) with 256^s <= B_n; 0 when even one byte does
/// not fit (n <= 3).
std::size_t block_size_for_rank(int n);

/// Splits data into fixed-size big-endian blocks, one group element each.
/// The final block is zero-padded; the pad byte count travels in a leading
/// header unit, so arbitrary byte strings round-trip exactly.
std::vector<SignedPermutation> bytes_to_units(std::span<const std::uint8_t> data, int n);
std::vector<std::uint8_t> units_to_bytes(const std::vector<SignedPermutation>& units, int n);

/// Binary unit-stream format: magic "HOB1", rank as u16 big-endian, block
/// size as u16 big-endian, then each window as n signed 32-bit big-endian
/// integers.
struct UnitStream {
  int n = 0;
  std::size_t block_size = 0;
  std::vector<SignedPermutation> units;
};

void write_unit_stream(std::ostream& out, const std::vector<SignedPermutation>& units, int n);
UnitStream read_unit_stream(std::istream& in);

}  // namespace hyperoct
