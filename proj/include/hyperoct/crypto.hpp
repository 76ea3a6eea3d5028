#pragma once

#include <iosfwd>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/rng.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Public protocol parameters: the group rank, the base element, and its
/// cached order with factorization (the factorization feeds Pohlig-Hellman
/// style analysis and secret sampling).
struct PublicParams {
  int n = 0;
  SignedPermutation beta = SignedPermutation::identity(1);
  BigInt beta_order;
  Factorization order_factors;

  static PublicParams create(SignedPermutation beta);
};

/// Upper bound for secret exponents. Exponents act modulo order(beta), so
/// element_order is the default; group_cardinality keeps the literal
/// 0 < a < 2^n * n! range for fidelity experiments.
enum class SecretBound { element_order, group_cardinality };

struct KeyPair {
  BigInt secret;
  SignedPermutation public_point = SignedPermutation::identity(1);
};

/// Draws secret uniformly from (0, bound) and publishes beta^secret.
/// Throws DegenerateBase when order(beta) = 1.
KeyPair keygen(const PublicParams& params, Rng& rng,
               SecretBound bound = SecretBound::element_order);

/// other_public^secret; both sides of an exchange arrive at beta^(ab).
SignedPermutation dh_shared(const KeyPair& own, const SignedPermutation& other_public);

struct ElGamalCiphertext {
  SignedPermutation m1 = SignedPermutation::identity(1);
  SignedPermutation m2 = SignedPermutation::identity(1);
};

/// (m1, m2) = (beta^a, mu * recipient_public^a) with a fresh ephemeral a per
/// message; mu is multiplied on the right so decryption can cancel from the
/// right.
ElGamalCiphertext elgamal_encrypt(const SignedPermutation& mu,
                                  const SignedPermutation& recipient_public,
                                  const PublicParams& params, Rng& rng);

/// mu = m2 * (m1^secret)^(-1).
SignedPermutation elgamal_decrypt(const ElGamalCiphertext& ct, const KeyPair& own);

/// Exponent pair for the three-pass protocol: c * c_inv = 1 mod 2^n * n!.
/// Any element order divides the group cardinality, so x^(c * c_inv) = x for
/// every x in B_n.
struct MasseyOmuraKey {
  BigInt c;
  BigInt c_inv;
  BigInt modulus;
};

/// Rejection-samples c in (0, B_n) coprime to B_n; inverse by extended gcd.
MasseyOmuraKey mo_keygen(int n, Rng& rng);

/// One transmission step: x^e.
SignedPermutation mo_pass(const SignedPermutation& x, const BigInt& e);

struct MoTranscript {
  SignedPermutation pass1 = SignedPermutation::identity(1);  // mu^c
  SignedPermutation pass2 = SignedPermutation::identity(1);  // mu^(c d)
  SignedPermutation pass3 = SignedPermutation::identity(1);  // mu^d
  SignedPermutation recovered = SignedPermutation::identity(1);
};

/// Runs the full three-pass exchange; recovered equals mu.
MoTranscript mo_session(const SignedPermutation& mu, const MasseyOmuraKey& alice,
                        const MasseyOmuraKey& bob);

// --- key and ciphertext files ------------------------------------------
//
// Text formats, one field per line:
//   base file:    n=<rank> / beta=<window> / order=<decimal>
//   private key:  base lines + secret=<decimal>
//   public key:   base lines + public=<window>
//   ciphertexts:  two window lines (m1, m2) per message unit

void write_base_file(std::ostream& out, const PublicParams& params);
PublicParams read_base_file(std::istream& in);

void write_private_key(std::ostream& out, const PublicParams& params, const KeyPair& key);
void write_public_key(std::ostream& out, const PublicParams& params,
                      const SignedPermutation& public_point);

struct PrivateKeyFile {
  PublicParams params;
  KeyPair key;
};
PrivateKeyFile read_private_key(std::istream& in);

struct PublicKeyFile {
  PublicParams params;
  SignedPermutation public_point = SignedPermutation::identity(1);
};
PublicKeyFile read_public_key(std::istream& in);

void write_ciphertexts(std::ostream& out, const std::vector<ElGamalCiphertext>& cts);
std::vector<ElGamalCiphertext> read_ciphertexts(std::istream& in);

}  // namespace hyperoct
