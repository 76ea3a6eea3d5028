#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "hyperoct/attacks.hpp"
#include "hyperoct/basegen.hpp"
#include "hyperoct/codec.hpp"
#include "hyperoct/crypto.hpp"

using namespace hyperoct;

TEST_SUITE_BEGIN("crypto");

namespace {

PublicParams smooth_params(int n, std::uint64_t p, std::vector<std::uint64_t> lengths,
                           std::uint64_t seed) {
  Rng rng(seed);
  return PublicParams::create(construct_base({.n = n, .p = p, .lengths = std::move(lengths),
                                              .signs = {}},
                                             rng));
}

}  // namespace

TEST_CASE("public params cache order and factors") {
  const auto params = smooth_params(12, 5, {4, 3}, 89);
  CHECK(params.n == 12);
  CHECK(params.beta_order == 60);
  CHECK(params.order_factors == Factorization{{2, 2}, {3, 1}, {5, 1}});
}

TEST_CASE("keygen rejects a degenerate base") {
  Rng rng(97);
  const auto params = PublicParams::create(SignedPermutation::identity(6));
  CHECK(params.beta_order == 1);
  CHECK_THROWS_AS(keygen(params, rng), DegenerateBase);
}

TEST_CASE("keygen publishes beta^secret with the secret below the base order") {
  Rng rng(101);
  // a positive 3-cycle inside B_5 has order 3, so secrets can only be 1 or 2
  const auto beta = recompose(5, {SignedCycle{{1, 4, 2}, {1, 1, 1}}});
  const auto params = PublicParams::create(beta);
  CHECK(params.beta_order == 3);
  std::set<long> secrets;
  for (int trial = 0; trial < 50; ++trial) {
    const auto key = keygen(params, rng);
    CHECK(key.secret > 0);
    CHECK(key.secret < 3);
    secrets.insert(key.secret.get_si());
    CHECK(key.public_point == power(params.beta, key.secret));
  }
  CHECK(secrets == std::set<long>{1, 2});
}

TEST_CASE("the literal bound samples from the whole cardinality range") {
  Rng rng(103);
  const auto params = smooth_params(8, 5, {2}, 107);
  bool above_order = false;
  for (int trial = 0; trial < 64; ++trial) {
    const auto key = keygen(params, rng, SecretBound::group_cardinality);
    CHECK(key.secret > 0);
    CHECK(key.secret < group_cardinality(8));
    if (key.secret >= params.beta_order) above_order = true;
    CHECK(key.public_point == power(params.beta, key.secret));
  }
  CHECK(above_order);  // overwhelmingly likely: order 10 vs cardinality 10321920
}

TEST_CASE("both ends of an exchange derive the same key") {
  Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const auto params = PublicParams::create(random_element(32, rng));
    if (params.beta_order == 1) continue;
    const auto alice = keygen(params, rng);
    const auto bob = keygen(params, rng);
    const auto shared_a = dh_shared(alice, bob.public_point);
    const auto shared_b = dh_shared(bob, alice.public_point);
    CHECK(shared_a == shared_b);
    CHECK(shared_a == power(params.beta, alice.secret * bob.secret % params.beta_order));
  }
}

TEST_CASE("equal secrets square the base") {
  const auto params = smooth_params(16, 7, {5}, 113);
  KeyPair key{.secret = 9, .public_point = power(params.beta, 9)};
  CHECK(dh_shared(key, key.public_point) == power(params.beta, 81 % params.beta_order));
  CHECK_THROWS_AS(dh_shared(key, SignedPermutation::identity(5)), RankMismatch);
}

TEST_CASE("the shared key stays inside the subgroup generated by the base") {
  Rng rng(127);
  const auto params = smooth_params(9, 3, {2}, 131);  // order 6
  const auto alice = keygen(params, rng);
  const auto bob = keygen(params, rng);
  const auto shared = dh_shared(alice, bob.public_point);
  const PermGroupOracle oracle(params.beta);
  const auto solved = dlp_bruteforce(oracle, shared, oracle.generator_order());
  CHECK(solved.found);  // a discrete log exists, so shared lies in <beta>
}

TEST_CASE("decryption undoes encryption") {
  Rng rng(137);
  const auto params = smooth_params(32, 13, {11, 7}, 139);
  const auto bob = keygen(params, rng);
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = random_element(32, rng);
    const auto ct = elgamal_encrypt(mu, bob.public_point, params, rng);
    CHECK(elgamal_decrypt(ct, bob) == mu);
  }
}

TEST_CASE("the identity message exposes the masking key") {
  Rng rng(149);
  const auto params = smooth_params(9, 3, {2}, 151);  // order 6, small enough to solve
  const auto bob = keygen(params, rng);
  const auto mu = SignedPermutation::identity(9);
  const auto ct = elgamal_encrypt(mu, bob.public_point, params, rng);
  // recover the ephemeral exponent from m1 and check m2 = recipient^a exactly
  const PermGroupOracle oracle(params.beta);
  const auto a = dlp_bruteforce(oracle, ct.m1, oracle.generator_order());
  REQUIRE(a.found);
  CHECK(ct.m2 == power(bob.public_point, a.x));
  CHECK(elgamal_decrypt(ct, bob) == mu);
}

TEST_CASE("fresh ephemerals make repeated encryptions differ") {
  Rng rng(157);
  const auto params = smooth_params(24, 11, {9, 4}, 163);
  const auto bob = keygen(params, rng);
  const auto mu = random_element(24, rng);
  int repeats = 0;
  auto previous = elgamal_encrypt(mu, bob.public_point, params, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ct = elgamal_encrypt(mu, bob.public_point, params, rng);
    if (ct.m1 == previous.m1 && ct.m2 == previous.m2) ++repeats;
    previous = ct;
  }
  CHECK(repeats == 0);
}

TEST_CASE("an identity m1 leaves the message bare") {
  Rng rng(313);
  const auto params = smooth_params(12, 5, {4, 3}, 317);
  const auto bob = keygen(params, rng);
  const auto mu = random_element(12, rng);
  // identity^secret = identity, so m2 decrypts unchanged
  const ElGamalCiphertext ct{SignedPermutation::identity(12), mu};
  CHECK(elgamal_decrypt(ct, bob) == mu);
}

TEST_CASE("public points lie in the subgroup generated by the base") {
  Rng rng(331);
  const auto params = smooth_params(9, 3, {2}, 337);  // order 6
  std::set<std::vector<std::int32_t>> subgroup;
  for (long e = 0; e < 6; ++e) subgroup.insert(power(params.beta, e).window());
  for (int trial = 0; trial < 20; ++trial) {
    const auto key = keygen(params, rng);
    CHECK(subgroup.count(key.public_point.window()) == 1);
  }
}

TEST_CASE("tampered ciphertexts decrypt to garbage") {
  Rng rng(167);
  const auto params = smooth_params(16, 7, {5, 3}, 173);
  const auto bob = keygen(params, rng);
  const auto mu = random_element(16, rng);
  auto ct = elgamal_encrypt(mu, bob.public_point, params, rng);
  ct.m2 = compose(ct.m2, recompose(16, {SignedCycle{{1, 2}, {1, 1}}}));
  CHECK(elgamal_decrypt(ct, bob) != mu);
}

TEST_CASE("right-multiplied masks always cancel") {
  Rng rng(179);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = random_element(20, rng);
    const auto mask = random_element(20, rng);
    CHECK(compose(compose(mu, mask), inverse(mask)) == mu);
  }
}

TEST_CASE("three-pass exponents invert modulo the cardinality") {
  Rng rng(181);
  const BigInt cardinality = group_cardinality(20);
  for (int trial = 0; trial < 100; ++trial) {
    const auto key = mo_keygen(20, rng);
    CHECK(key.modulus == cardinality);
    CHECK(key.c > 0);
    CHECK(key.c < cardinality);
    CHECK(mpz_odd_p(key.c.get_mpz_t()));  // 2 divides the cardinality
    CHECK(key.c * key.c_inv % cardinality == 1);
  }
  // rank 1: the only unit modulo 2 is 1
  const auto forced = mo_keygen(1, rng);
  CHECK(forced.c == 1);
  CHECK(forced.c_inv == 1);
}

TEST_CASE("exponent pairs cancel on every element") {
  Rng rng(191);
  for (int n : {3, 8, 14, 20}) {
    const auto key = mo_keygen(n, rng);
    for (int trial = 0; trial < 10; ++trial) {
      const auto mu = random_element(n, rng);
      CHECK(power(mu, key.c * key.c_inv) == mu);
    }
  }
}

TEST_CASE("three passes recover the message") {
  Rng rng(193);
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = random_element(32, rng);
    const auto alice = mo_keygen(32, rng);
    const auto bob = mo_keygen(32, rng);
    const auto t = mo_session(mu, alice, bob);
    CHECK(t.pass1 == power(mu, alice.c));
    CHECK(t.pass2 == power(mu, alice.c * bob.c));
    CHECK(t.pass3 == power(mu, bob.c));
    CHECK(t.recovered == mu);
  }

  SUBCASE("identity transcripts stay identity") {
    const auto alice = mo_keygen(12, rng);
    const auto bob = mo_keygen(12, rng);
    const auto t = mo_session(SignedPermutation::identity(12), alice, bob);
    CHECK(t.pass1 == SignedPermutation::identity(12));
    CHECK(t.pass2 == SignedPermutation::identity(12));
    CHECK(t.pass3 == SignedPermutation::identity(12));
    CHECK(t.recovered == SignedPermutation::identity(12));
  }
  SUBCASE("trivial exponents pass the message through") {
    const MasseyOmuraKey unit{.c = 1, .c_inv = 1, .modulus = group_cardinality(12)};
    const auto bob = mo_keygen(12, rng);
    const auto mu = random_element(12, rng);
    const auto t = mo_session(mu, unit, bob);
    CHECK(t.pass1 == mu);
    CHECK(t.pass2 == power(mu, bob.c));
    CHECK(t.pass3 == power(mu, bob.c));
    CHECK(t.recovered == mu);
  }
  SUBCASE("mismatched group sizes are rejected") {
    const auto alice = mo_keygen(12, rng);
    const auto bob = mo_keygen(13, rng);
    CHECK_THROWS_AS(mo_session(random_element(12, rng), alice, bob), RankMismatch);
  }
}

TEST_CASE("key files round-trip") {
  Rng rng(197);
  const auto params = smooth_params(16, 7, {5, 3}, 199);
  const auto key = keygen(params, rng);

  std::stringstream base;
  write_base_file(base, params);
  const auto params2 = read_base_file(base);
  CHECK(params2.n == params.n);
  CHECK(params2.beta == params.beta);
  CHECK(params2.beta_order == params.beta_order);
  CHECK(params2.order_factors == params.order_factors);

  std::stringstream priv;
  write_private_key(priv, params, key);
  const auto loaded = read_private_key(priv);
  CHECK(loaded.key.secret == key.secret);
  CHECK(loaded.key.public_point == key.public_point);

  std::stringstream pub;
  write_public_key(pub, params, key.public_point);
  const auto loaded_pub = read_public_key(pub);
  CHECK(loaded_pub.public_point == key.public_point);
  CHECK(loaded_pub.params.beta == params.beta);

  SUBCASE("a wrong declared order is rejected") {
    std::stringstream bad("n=2\nbeta=2 1\norder=3\n");
    CHECK_THROWS_AS(read_base_file(bad), ParseError);
  }
  SUBCASE("missing fields are rejected") {
    std::stringstream bad("n=2\nbeta=2 1\n");
    CHECK_THROWS_AS(read_base_file(bad), ParseError);
  }
  SUBCASE("non-positive secrets are rejected") {
    std::stringstream bad("n=2\nbeta=2 1\norder=2\nsecret=0\n");
    CHECK_THROWS_AS(read_private_key(bad), ParseError);
  }
}

TEST_CASE("ciphertext files round-trip") {
  Rng rng(211);
  const auto params = smooth_params(16, 7, {5, 3}, 223);
  const auto bob = keygen(params, rng);

  std::vector<ElGamalCiphertext> cts;
  std::vector<SignedPermutation> mus;
  for (int i = 0; i < 5; ++i) {
    mus.push_back(random_element(16, rng));
    cts.push_back(elgamal_encrypt(mus.back(), bob.public_point, params, rng));
  }

  std::stringstream file;
  write_ciphertexts(file, cts);
  const auto loaded = read_ciphertexts(file);
  REQUIRE(loaded.size() == cts.size());
  for (std::size_t i = 0; i < cts.size(); ++i) CHECK(elgamal_decrypt(loaded[i], bob) == mus[i]);

  std::stringstream odd("1 2 3\n");
  CHECK_THROWS_AS(read_ciphertexts(odd), ParseError);
}

TEST_SUITE_END();
