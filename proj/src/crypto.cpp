#include "hyperoct/crypto.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "hyperoct/basegen.hpp"
#include "hyperoct/codec.hpp"
#include "hyperoct/errors.hpp"

namespace hyperoct {

namespace {

void check_rank(int expected, const SignedPermutation& x, const char* what) {
  if (x.rank() != expected)
    throw RankMismatch(std::string(what) + ": rank " + std::to_string(x.rank()) +
                       ", expected " + std::to_string(expected));
}

// parses "name=value" lines into a map; blank lines ignored
std::map<std::string, std::string> read_fields(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("key file line without '=': '" + line + "'");
    fields[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return fields;
}

const std::string& require_field(const std::map<std::string, std::string>& fields,
                                 const std::string& name) {
  const auto it = fields.find(name);
  if (it == fields.end()) throw ParseError("key file misses field '" + name + "'");
  return it->second;
}

PublicParams params_from_fields(const std::map<std::string, std::string>& fields) {
  const int n = std::stoi(require_field(fields, "n"));
  auto beta = SignedPermutation::from_window(n, parse_window(require_field(fields, "beta")));
  auto params = PublicParams::create(std::move(beta));
  const BigInt declared(require_field(fields, "order"));
  if (declared != params.beta_order)
    throw ParseError("declared order " + declared.get_str() + " differs from order(beta) = " +
                     params.beta_order.get_str());
  return params;
}

}  // namespace

PublicParams PublicParams::create(SignedPermutation beta) {
  PublicParams params;
  params.n = beta.rank();
  params.beta_order = order(beta);
  params.order_factors = factor_order(beta);
  params.beta = std::move(beta);
  return params;
}

KeyPair keygen(const PublicParams& params, Rng& rng, SecretBound bound) {
  if (params.beta_order == 1) throw DegenerateBase("base generates the trivial subgroup");
  const BigInt modulus =
      bound == SecretBound::element_order ? params.beta_order : group_cardinality(params.n);
  KeyPair key;
  key.secret = rng.below(modulus - 1) + 1;  // uniform in (0, modulus)
  key.public_point = power(params.beta, key.secret);
  return key;
}

SignedPermutation dh_shared(const KeyPair& own, const SignedPermutation& other_public) {
  check_rank(own.public_point.rank(), other_public, "dh_shared");
  return power(other_public, own.secret);
}

ElGamalCiphertext elgamal_encrypt(const SignedPermutation& mu,
                                  const SignedPermutation& recipient_public,
                                  const PublicParams& params, Rng& rng) {
  check_rank(params.n, mu, "elgamal_encrypt: message");
  check_rank(params.n, recipient_public, "elgamal_encrypt: recipient key");
  if (params.beta_order == 1) throw DegenerateBase("base generates the trivial subgroup");
  const BigInt ephemeral = rng.below(params.beta_order - 1) + 1;  // fresh per message
  ElGamalCiphertext ct;
  ct.m1 = power(params.beta, ephemeral);
  ct.m2 = compose(mu, power(recipient_public, ephemeral));
  return ct;
}

SignedPermutation elgamal_decrypt(const ElGamalCiphertext& ct, const KeyPair& own) {
  check_rank(own.public_point.rank(), ct.m1, "elgamal_decrypt: m1");
  check_rank(own.public_point.rank(), ct.m2, "elgamal_decrypt: m2");
  return compose(ct.m2, inverse(power(ct.m1, own.secret)));
}

MasseyOmuraKey mo_keygen(int n, Rng& rng) {
  MasseyOmuraKey key;
  key.modulus = group_cardinality(n);
  BigInt g;
  do {
    key.c = rng.below(key.modulus - 1) + 1;
    mpz_gcd(g.get_mpz_t(), key.c.get_mpz_t(), key.modulus.get_mpz_t());
  } while (g != 1);
  key.c_inv = invert_mod(key.c, key.modulus);
  return key;
}

SignedPermutation mo_pass(const SignedPermutation& x, const BigInt& e) {
  return power(x, e);
}

MoTranscript mo_session(const SignedPermutation& mu, const MasseyOmuraKey& alice,
                        const MasseyOmuraKey& bob) {
  if (alice.modulus != bob.modulus)
    throw RankMismatch("mo_session: keys drawn for different group sizes");
  MoTranscript t;
  t.pass1 = mo_pass(mu, alice.c);
  t.pass2 = mo_pass(t.pass1, bob.c);
  t.pass3 = mo_pass(t.pass2, alice.c_inv);
  t.recovered = mo_pass(t.pass3, bob.c_inv);
  return t;
}

void write_base_file(std::ostream& out, const PublicParams& params) {
  out << "n=" << params.n << "\n"
      << "beta=" << to_string(params.beta) << "\n"
      << "order=" << params.beta_order.get_str() << "\n";
}

PublicParams read_base_file(std::istream& in) {
  return params_from_fields(read_fields(in));
}

void write_private_key(std::ostream& out, const PublicParams& params, const KeyPair& key) {
  write_base_file(out, params);
  out << "secret=" << key.secret.get_str() << "\n";
}

void write_public_key(std::ostream& out, const PublicParams& params,
                      const SignedPermutation& public_point) {
  write_base_file(out, params);
  out << "public=" << to_string(public_point) << "\n";
}

PrivateKeyFile read_private_key(std::istream& in) {
  const auto fields = read_fields(in);
  PrivateKeyFile file{params_from_fields(fields), KeyPair{}};
  file.key.secret = BigInt(require_field(fields, "secret"));
  if (file.key.secret <= 0) throw ParseError("secret must be positive");
  file.key.public_point = power(file.params.beta, file.key.secret);
  return file;
}

PublicKeyFile read_public_key(std::istream& in) {
  const auto fields = read_fields(in);
  PublicKeyFile file;
  file.params = params_from_fields(fields);
  file.public_point =
      SignedPermutation::from_window(file.params.n, parse_window(require_field(fields, "public")));
  return file;
}

void write_ciphertexts(std::ostream& out, const std::vector<ElGamalCiphertext>& cts) {
  for (const auto& ct : cts) out << to_string(ct.m1) << "\n" << to_string(ct.m2) << "\n";
}

std::vector<ElGamalCiphertext> read_ciphertexts(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() % 2 != 0) throw ParseError("ciphertext file has an unpaired window line");
  std::vector<ElGamalCiphertext> cts;
  for (std::size_t i = 0; i < lines.size(); i += 2) {
    ElGamalCiphertext ct;
    ct.m1 = SignedPermutation::from_window(parse_window(lines[i]));
    ct.m2 = SignedPermutation::from_window(parse_window(lines[i + 1]));
    if (ct.m1.rank() != ct.m2.rank()) throw RankMismatch("ciphertext halves of different rank");
    cts.push_back(std::move(ct));
  }
  return cts;
}

}  // namespace hyperoct
