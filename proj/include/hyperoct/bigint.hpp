#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

/// Arbitrary-precision non-negative integer used for exponents, element
/// orders and group cardinalities (these overflow machine words quickly:
/// 2^n * n! already exceeds 2^64 at n = 13).
using BigInt = mpz_class;

/// Prime factorization as (prime, multiplicity) pairs, primes ascending.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

/// Modular inverse of a mod m; throws ModuliNotCoprime if gcd(a, m) != 1.
BigInt invert_mod(const BigInt& a, const BigInt& m);

/// Smallest integer s with s * s >= n.
BigInt isqrt_ceil(const BigInt& n);

}  // namespace hyperoct
