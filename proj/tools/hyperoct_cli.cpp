// Command-line front end: integer/byte encoding, key generation, the three
// protocols, smooth-base construction, discrete-log attacks, and the
// composition benchmark. Every command verifies its own postcondition and
// exits non-zero when that check fails; all randomness is seedable.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperoct/attacks.hpp"
#include "hyperoct/basegen.hpp"
#include "hyperoct/bench.hpp"
#include "hyperoct/codec.hpp"
#include "hyperoct/crypto.hpp"
#include "hyperoct/errors.hpp"

using namespace hyperoct;

namespace {

std::uint64_t seed_or_random(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("write to " + path + " failed");
}

std::ifstream open_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

std::ofstream create_text(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  return out;
}

void write_units_text(std::ostream& out, const std::vector<SignedPermutation>& units) {
  for (const auto& u : units) out << to_string(u) << "\n";
}

std::vector<SignedPermutation> read_units_text(std::istream& in, int expected_rank) {
  std::vector<SignedPermutation> units;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto unit = SignedPermutation::from_window(parse_window(line));
    if (expected_rank > 0 && unit.rank() != expected_rank)
      throw RankMismatch("unit of rank " + std::to_string(unit.rank()) + " in a rank-" +
                         std::to_string(expected_rank) + " stream");
    units.push_back(std::move(unit));
  }
  return units;
}

// the base may arrive as a file, a literal window, or a construction spec
struct BaseSource {
  std::string base_file;
  std::string base_window;
  std::string spec;
  bool random_signs = false;

  void add_options(CLI::App& cmd) {
    cmd.add_option("--base-file", base_file, "base/public-params file");
    cmd.add_option("--base", base_window, "base element as a window, e.g. \"3 -1 2\"");
    cmd.add_option("--spec", spec, "cycle recipe n=<n>,p=<p>,lengths=<l1+l2+...>");
    cmd.add_flag("--random-signs", random_signs, "randomize cycle signs in --spec mode");
  }

  PublicParams load(Rng& rng) const {
    const int sources = (!base_file.empty()) + (!base_window.empty()) + (!spec.empty());
    if (sources != 1) throw Error("give exactly one of --base-file, --base, --spec");
    if (!base_file.empty()) {
      auto in = open_text(base_file);
      return read_base_file(in);
    }
    if (!base_window.empty())
      return PublicParams::create(SignedPermutation::from_window(parse_window(base_window)));
    auto parsed = parse_base_spec(spec);
    if (random_signs && !parsed.signs) {
      std::vector<int> signs(1 + parsed.lengths.size());
      for (auto& s : signs) s = rng.coin() ? -1 : 1;
      parsed.signs = std::move(signs);
    }
    return PublicParams::create(construct_base(parsed, rng));
  }
};

int cmd_encode(const std::string& integer_text, int n, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
  if (!integer_text.empty()) {
    if (n <= 0) throw Error("--n is required when encoding an integer");
    const BigInt value(integer_text);
    const auto pi = int_to_signed_perm(value, n);
    std::cout << "window: " << to_string(pi) << "\n";
    std::cout << "digits: " << digits_to_string(int_to_digits(value)) << "\n";
    return signed_perm_to_int(pi) == value ? 0 : 1;
  }
  if (in_path.empty()) throw Error("give an integer or --in <file>");
  if (n <= 0) throw Error("--n is required");
  if (out_path.empty()) throw Error("--out is required in file mode");

  const auto data = read_file_bytes(in_path);
  const auto units = bytes_to_units(data, n);
  if (format == "bin") {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open " + out_path);
    write_unit_stream(out, units, n);
  } else {
    auto out = create_text(out_path);
    write_units_text(out, units);
  }
  std::cout << "units: " << units.size() << " (1 header + " << units.size() - 1 << " data)\n";
  std::cout << "block-size: " << block_size_for_rank(n) << "\n";
  return units_to_bytes(units, n) == data ? 0 : 1;
}

int cmd_decode(const std::string& window_text, int n, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
  if (!window_text.empty()) {
    auto values = parse_window(window_text);
    const auto pi = n > 0 ? SignedPermutation::from_window(n, std::move(values))
                          : SignedPermutation::from_window(std::move(values));
    const auto value = signed_perm_to_int(pi);
    std::cout << "integer: " << value.get_str() << "\n";
    std::cout << "digits: " << digits_to_string(signed_perm_to_digits(pi)) << "\n";
    return int_to_signed_perm(value, pi.rank()) == pi ? 0 : 1;
  }
  if (in_path.empty()) throw Error("give --window or --in <file>");
  if (out_path.empty()) throw Error("--out is required in file mode");

  std::vector<SignedPermutation> units;
  int rank = n;
  if (format == "bin") {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw Error("cannot open " + in_path);
    auto stream = read_unit_stream(in);
    units = std::move(stream.units);
    rank = stream.n;
    if (n > 0 && n != rank) throw RankMismatch("--n disagrees with the stream rank");
  } else {
    auto in = open_text(in_path);
    units = read_units_text(in, n);
    if (units.empty()) throw ParseError("no units in " + in_path);
    rank = units.front().rank();
  }
  const auto data = units_to_bytes(units, rank);
  write_file_bytes(out_path, data);
  std::cout << "bytes: " << data.size() << "\n";
  return bytes_to_units(data, rank) == units ? 0 : 1;
}

int cmd_keygen(const BaseSource& source, const std::optional<std::uint64_t>& seed,
               const std::string& out_prefix, bool cardinality_bound) {
  Rng rng(seed_or_random(seed));
  const auto params = source.load(rng);
  const auto key = keygen(params, rng,
                          cardinality_bound ? SecretBound::group_cardinality : SecretBound::element_order);
  {
    auto priv = create_text(out_prefix + ".priv");
    write_private_key(priv, params, key);
  }
  {
    auto pub = create_text(out_prefix + ".pub");
    write_public_key(pub, params, key.public_point);
  }
  std::cout << "n=" << params.n << "\n";
  std::cout << "order=" << params.beta_order.get_str() << "\n";
  std::cout << "public=" << to_string(key.public_point) << "\n";
  std::cout << "wrote " << out_prefix << ".priv and " << out_prefix << ".pub\n";
  return key.public_point == power(params.beta, key.secret) ? 0 : 1;
}

int cmd_dh(const BaseSource& source, std::uint64_t seed_a, std::uint64_t seed_b,
           const std::optional<std::uint64_t>& seed) {
  Rng rng(seed_or_random(seed));
  const auto params = source.load(rng);
  Rng rng_a(seed_a), rng_b(seed_b);
  const auto alice = keygen(params, rng_a);
  const auto bob = keygen(params, rng_b);
  const auto shared_a = dh_shared(alice, bob.public_point);
  const auto shared_b = dh_shared(bob, alice.public_point);
  std::cout << "alice-public: " << to_string(alice.public_point) << "\n";
  std::cout << "bob-public: " << to_string(bob.public_point) << "\n";
  std::cout << "shared-alice: " << to_string(shared_a) << "\n";
  std::cout << "shared-bob: " << to_string(shared_b) << "\n";
  const bool agree = shared_a == shared_b;
  std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
  return agree ? 0 : 1;
}

int cmd_elgamal_encrypt(const std::string& pub_path, const std::string& in_path,
                        const std::string& out_path, const std::optional<std::uint64_t>& seed) {
  auto pub_in = open_text(pub_path);
  const auto pub = read_public_key(pub_in);
  Rng rng(seed_or_random(seed));

  const auto data = read_file_bytes(in_path);
  const auto units = bytes_to_units(data, pub.params.n);
  std::vector<ElGamalCiphertext> cts;
  cts.reserve(units.size());
  for (const auto& unit : units)
    cts.push_back(elgamal_encrypt(unit, pub.public_point, pub.params, rng));

  auto out = create_text(out_path);
  write_ciphertexts(out, cts);
  std::cout << "units: " << cts.size() << "\n";
  return 0;
}

int cmd_elgamal_decrypt(const std::string& priv_path, const std::string& in_path,
                        const std::string& out_path) {
  auto priv_in = open_text(priv_path);
  const auto priv = read_private_key(priv_in);
  auto ct_in = open_text(in_path);
  const auto cts = read_ciphertexts(ct_in);

  std::vector<SignedPermutation> units;
  units.reserve(cts.size());
  for (const auto& ct : cts) units.push_back(elgamal_decrypt(ct, priv.key));
  const auto data = units_to_bytes(units, priv.params.n);
  write_file_bytes(out_path, data);
  std::cout << "bytes: " << data.size() << "\n";
  return 0;
}

int cmd_mo_session(int n, const std::optional<std::uint64_t>& seed, const std::string& in_path,
                   const std::string& integer_text, const std::string& out_path) {
  if (n <= 0) throw Error("--n is required");
  Rng rng(seed_or_random(seed));
  const auto alice = mo_keygen(n, rng);
  const auto bob = mo_keygen(n, rng);

  std::vector<SignedPermutation> units;
  if (!integer_text.empty()) {
    units.push_back(int_to_signed_perm(BigInt(integer_text), n));
  } else if (!in_path.empty()) {
    units = bytes_to_units(read_file_bytes(in_path), n);
  } else {
    throw Error("give --in <file> or --int <value>");
  }

  bool ok = true;
  std::vector<SignedPermutation> recovered;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto t = mo_session(units[i], alice, bob);
    std::cout << "unit " << i << " pass1: " << to_string(t.pass1) << "\n";
    std::cout << "unit " << i << " pass2: " << to_string(t.pass2) << "\n";
    std::cout << "unit " << i << " pass3: " << to_string(t.pass3) << "\n";
    std::cout << "unit " << i << " recovered: " << to_string(t.recovered) << "\n";
    ok = ok && t.recovered == units[i];
    recovered.push_back(t.recovered);
  }
  if (!out_path.empty() && in_path.empty()) throw Error("--out needs --in");
  if (!out_path.empty()) write_file_bytes(out_path, units_to_bytes(recovered, n));
  std::cout << "recovered: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_basegen(const std::string& spec_text, const std::optional<std::uint64_t>& seed,
                bool random_signs, const std::string& out_path) {
  Rng rng(seed_or_random(seed));
  auto spec = parse_base_spec(spec_text);
  if (random_signs && !spec.signs) {
    std::vector<int> signs(1 + spec.lengths.size());
    for (auto& s : signs) s = rng.coin() ? -1 : 1;
    spec.signs = std::move(signs);
  }
  const auto params = PublicParams::create(construct_base(spec, rng));
  std::cout << to_string(params.beta) << "\n";
  std::cout << "order=" << params.beta_order.get_str()
            << " factors=" << factors_to_string(params.order_factors) << "\n";
  if (!out_path.empty()) {
    auto out = create_text(out_path);
    write_base_file(out, params);
  }
  // the construction promise: p-smooth but not (p-1)-smooth
  const bool ok = is_b_smooth(params.beta_order, spec.p) &&
                  !is_b_smooth(params.beta_order, spec.p - 1);
  return ok ? 0 : 1;
}

int cmd_attack(const BaseSource& source, const std::string& method,
               const std::string& challenge_text, const std::optional<std::uint64_t>& seed) {
  Rng rng(seed_or_random(seed));
  const auto params = source.load(rng);
  const PermGroupOracle oracle(params.beta);

  SignedPermutation challenge = SignedPermutation::identity(params.n);
  if (!challenge_text.empty()) {
    challenge = SignedPermutation::from_window(params.n, parse_window(challenge_text));
  } else {
    BigInt bound = params.beta_order - 1;
    if (bound < 1) bound = 1;
    const BigInt exponent = 1 + rng.below(bound);
    challenge = power(params.beta, exponent);
    std::cout << "challenge: " << to_string(challenge) << "\n";
  }

  BigInt x;
  std::uint64_t ops = 0;
  bool found = false;
  if (method == "brute") {
    const auto res = dlp_bruteforce(oracle, challenge, oracle.generator_order());
    found = res.found, x = res.x, ops = res.search_ops;
  } else if (method == "bsgs") {
    const auto res = bsgs(oracle, challenge);
    found = res.found, x = res.x, ops = res.search_ops;
  } else {
    const auto res = pohlig_hellman(oracle, challenge);
    found = res.found, x = res.x, ops = res.search_ops;
    for (const auto& sub : res.subproblems)
      std::cout << "subproblem: prime=" << sub.prime.get_str() << " exponent=" << sub.exponent
                << " ops=" << sub.search_ops << "\n";
  }

  const bool verified = found && power(params.beta, x) == challenge;
  std::cout << "method=" << method << " order=" << params.beta_order.get_str() << " ops=" << ops
            << " x=" << (found ? x.get_str() : std::string("-")) << " verified="
            << (verified ? "true" : "false") << "\n";
  return verified ? 0 : 1;
}

int cmd_bench(const std::string& ranks_text, int reps, const std::optional<std::uint64_t>& seed) {
  std::vector<int> ranks;
  std::stringstream in(ranks_text);
  std::string token;
  while (std::getline(in, token, ',')) ranks.push_back(std::stoi(token));
  if (ranks.empty()) throw Error("--ranks must name at least one rank");

  Rng rng(seed_or_random(seed));
  std::vector<ComposeTiming> timings;
  for (const int n : ranks) {
    const auto t = bench_compose(n, reps, rng);
    timings.push_back(t);
    std::cout << "rank=" << t.n << " reps=" << t.reps
              << " ns-per-compose=" << t.seconds_per_compose * 1e9 << "\n";
  }
  for (std::size_t i = 1; i < timings.size(); ++i) {
    const double ratio = timings[i].seconds_per_compose / timings[i - 1].seconds_per_compose;
    std::cout << "ratio " << timings[i].n << "/" << timings[i - 1].n << ": " << ratio << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed-permutation group toolkit: codec, protocols, attacks"};
  app.require_subcommand(1);
  app.fallthrough(true);  // lets --seed appear after the subcommand name

  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "seed for all randomness (reproducible runs)");

  // encode
  auto* encode = app.add_subcommand("encode", "integer or file bytes -> group elements");
  std::string enc_integer, enc_in, enc_out, enc_format = "text";
  int enc_n = 0;
  encode->add_option("integer", enc_integer, "non-negative integer to encode");
  encode->add_option("--n", enc_n, "group rank");
  encode->add_option("--in", enc_in, "input file (byte mode)");
  encode->add_option("--out", enc_out, "output unit file (byte mode)");
  encode->add_option("--format", enc_format, "text|bin")->check(CLI::IsMember({"text", "bin"}));

  // decode
  auto* decode = app.add_subcommand("decode", "group elements -> integer or file bytes");
  std::string dec_window, dec_in, dec_out, dec_format = "text";
  int dec_n = 0;
  decode->add_option("--window", dec_window, "window to decode, e.g. \"1 2 3\"");
  decode->add_option("--n", dec_n, "expected rank");
  decode->add_option("--in", dec_in, "input unit file");
  decode->add_option("--out", dec_out, "output byte file");
  decode->add_option("--format", dec_format, "text|bin")->check(CLI::IsMember({"text", "bin"}));

  // keygen
  auto* kg = app.add_subcommand("keygen", "draw a secret and publish beta^secret");
  BaseSource kg_source;
  kg_source.add_options(*kg);
  std::string kg_out;
  bool kg_cardinality_bound = false;
  kg->add_option("--out", kg_out, "output file prefix")->required();
  kg->add_flag("--cardinality-bound", kg_cardinality_bound,
               "sample the secret below 2^n*n! instead of order(beta)");

  // dh
  auto* dh = app.add_subcommand("dh", "run both sides of a key exchange");
  BaseSource dh_source;
  dh_source.add_options(*dh);
  std::uint64_t dh_seed_a = 1, dh_seed_b = 2;
  dh->add_option("--seed-a", dh_seed_a, "seed for the first party");
  dh->add_option("--seed-b", dh_seed_b, "seed for the second party");

  // elgamal
  auto* ee = app.add_subcommand("elgamal-encrypt", "encrypt a file against a public key");
  std::string ee_pub, ee_in, ee_out;
  ee->add_option("--pub", ee_pub, "recipient public key file")->required();
  ee->add_option("--in", ee_in, "plaintext file")->required();
  ee->add_option("--out", ee_out, "ciphertext file")->required();

  auto* ed = app.add_subcommand("elgamal-decrypt", "decrypt a ciphertext file");
  std::string ed_priv, ed_in, ed_out;
  ed->add_option("--priv", ed_priv, "private key file")->required();
  ed->add_option("--in", ed_in, "ciphertext file")->required();
  ed->add_option("--out", ed_out, "plaintext file")->required();

  // massey-omura
  auto* mo = app.add_subcommand("mo-session", "three-pass transmission transcript");
  int mo_n = 0;
  std::string mo_in, mo_int, mo_out;
  mo->add_option("--n", mo_n, "group rank")->required();
  mo->add_option("--in", mo_in, "message file");
  mo->add_option("--int", mo_int, "single integer message");
  mo->add_option("--out", mo_out, "write the recovered bytes here");

  // basegen
  auto* bg = app.add_subcommand("basegen", "construct a base with a smooth order");
  std::string bg_spec, bg_out;
  bool bg_random_signs = false;
  bg->add_option("--spec", bg_spec, "n=<n>,p=<p>,lengths=<l1+l2+...>")->required();
  bg->add_flag("--random-signs", bg_random_signs, "randomize cycle signs");
  bg->add_option("--out", bg_out, "write the base file here");

  // attack
  auto* at = app.add_subcommand("attack", "solve a discrete-log challenge in <beta>");
  BaseSource at_source;
  at_source.add_options(*at);
  std::string at_method = "ph", at_challenge;
  at->add_option("--method", at_method, "brute|bsgs|ph")
      ->check(CLI::IsMember({"brute", "bsgs", "ph"}));
  at->add_option("--challenge", at_challenge, "challenge window (random when absent)");

  // bench
  auto* bench = app.add_subcommand("bench", "time compose() across ranks");
  std::string bench_ranks = "100000,1000000";
  int bench_reps = 0;
  bench->add_option("--ranks", bench_ranks, "comma-separated ranks");
  bench->add_option("--reps", bench_reps, "compositions per batch (0 = auto)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) return cmd_encode(enc_integer, enc_n, enc_in, enc_out, enc_format);
    if (decode->parsed()) return cmd_decode(dec_window, dec_n, dec_in, dec_out, dec_format);
    if (kg->parsed()) return cmd_keygen(kg_source, seed, kg_out, kg_cardinality_bound);
    if (dh->parsed()) return cmd_dh(dh_source, dh_seed_a, dh_seed_b, seed);
    if (ee->parsed()) return cmd_elgamal_encrypt(ee_pub, ee_in, ee_out, seed);
    if (ed->parsed()) return cmd_elgamal_decrypt(ed_priv, ed_in, ed_out);
    if (mo->parsed()) return cmd_mo_session(mo_n, seed, mo_in, mo_int, mo_out);
    if (bg->parsed()) return cmd_basegen(bg_spec, seed, bg_random_signs, bg_out);
    if (at->parsed()) return cmd_attack(at_source, at_method, at_challenge, seed);
    if (bench->parsed()) return cmd_bench(bench_ranks, bench_reps, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
