#pragma once

#include <stdexcept>

namespace hyperoct {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// window length disagrees with the expected rank, or operands live in
// different groups
struct RankMismatch : Error { using Error::Error; };
// absolute values of a window are not a permutation of 1..n
struct NotAPermutation : Error { using Error::Error; };
// a window entry is zero
struct ZeroEntry : Error { using Error::Error; };
// digit d_i exceeds its admissible range 0..2i+1
struct DigitOutOfRange : Error { using Error::Error; };
// more significant digits than the requested rank can carry
struct TooManyDigits : Error { using Error::Error; };
// integer argument outside the documented domain
struct ValueOutOfRange : Error { using Error::Error; };
// an operation that requires an unsigned permutation saw a negative entry
struct SignedInput : Error { using Error::Error; };
// a message block does not fit into one group element
struct BlockTooLarge : Error { using Error::Error; };
// base element generates the trivial subgroup
struct DegenerateBase : Error { using Error::Error; };
// cycle-structure request violates its feasibility constraints
struct SpecInfeasible : Error { using Error::Error; };
// parameter that must be prime is not
struct NotPrime : Error { using Error::Error; };
// CRT moduli share a common factor
struct ModuliNotCoprime : Error { using Error::Error; };
// subgroup order factorization absent or incomplete
struct FactorizationMissing : Error { using Error::Error; };
// malformed textual or binary input
struct ParseError : Error { using Error::Error; };

}  // namespace hyperoct
