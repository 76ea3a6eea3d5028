#include "hyperoct/basegen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hyperoct/errors.hpp"

namespace hyperoct {

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (composite[q]) continue;
    primes.push_back(q);
    for (std::uint64_t multiple = q * q; multiple <= limit; multiple += q) composite[multiple] = true;
  }
  return primes;
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("not an integer: '" + text + "'");
  return v;
}

}  // namespace

BaseSpec parse_base_spec(const std::string& text) {
  BaseSpec spec;
  bool saw_n = false, saw_p = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string field = text.substr(pos, next - pos);
    const std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("spec field without '=': '" + field + "'");
    const std::string name = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (name == "n") {
      spec.n = static_cast<int>(parse_u64(value));
      saw_n = true;
    } else if (name == "p") {
      spec.p = parse_u64(value);
      saw_p = true;
    } else if (name == "lengths") {
      std::size_t lp = 0;
      while (!value.empty() && lp <= value.size()) {
        const std::size_t ln = std::min(value.find('+', lp), value.size());
        spec.lengths.push_back(parse_u64(value.substr(lp, ln - lp)));
        lp = ln + 1;
      }
    } else {
      throw ParseError("unknown spec field: '" + name + "'");
    }
    pos = next + 1;
  }
  if (!saw_n || !saw_p) throw ParseError("spec needs at least n=... and p=...");
  return spec;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

SignedPermutation construct_base(const BaseSpec& spec, Rng& rng) {
  if (!is_prime(spec.p)) throw NotPrime("p = " + std::to_string(spec.p) + " is not prime");
  if (spec.n < 1) throw SpecInfeasible("rank must be positive");

  std::uint64_t support_size = spec.p;
  for (const auto l : spec.lengths) {
    if (l < 1 || l > spec.p)
      throw SpecInfeasible("cycle length " + std::to_string(l) + " outside 1..p");
    support_size += l;
  }
  if (support_size > static_cast<std::uint64_t>(spec.n))
    throw SpecInfeasible("supports need " + std::to_string(support_size) + " positions, rank is " +
                         std::to_string(spec.n));

  const std::size_t cycle_count = 1 + spec.lengths.size();
  if (spec.signs && spec.signs->size() != cycle_count)
    throw SpecInfeasible("expected " + std::to_string(cycle_count) + " cycle signs");
  if (spec.signs)
    for (const int s : *spec.signs)
      if (s != 1 && s != -1) throw SpecInfeasible("cycle signs must be +1 or -1");

  // random arrangement of distinct positions for the supports
  std::vector<std::int32_t> positions(static_cast<std::size_t>(spec.n));
  std::iota(positions.begin(), positions.end(), 1);
  for (std::uint64_t i = positions.size() - 1; i > 0; --i)
    std::swap(positions[i], positions[rng.below(i + 1)]);

  std::vector<SignedCycle> cycles;
  std::size_t offset = 0;
  for (std::size_t c = 0; c < cycle_count; ++c) {
    const std::uint64_t len = c == 0 ? spec.p : spec.lengths[c - 1];
    SignedCycle cycle;
    cycle.support.assign(positions.begin() + offset, positions.begin() + offset + len);
    cycle.signs.assign(len, 1);
    if (spec.signs && (*spec.signs)[c] < 0) cycle.signs.back() = -1;
    offset += len;
    cycles.push_back(std::move(cycle));
  }
  return recompose(spec.n, cycles);
}

bool is_b_smooth(const BigInt& value, std::uint64_t bound) {
  if (value < 1) throw ValueOutOfRange("is_b_smooth: value must be >= 1");
  BigInt rest = value;
  for (const auto q : primes_up_to(bound))
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
  return rest == 1;
}

Factorization factor_order(const SignedPermutation& pi) {
  BigInt rest = order(pi);
  Factorization factors;
  const std::uint64_t limit = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(pi.rank()));
  for (const auto q : primes_up_to(limit)) {
    unsigned multiplicity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++multiplicity;
    }
    if (multiplicity > 0) factors.emplace_back(BigInt(q), multiplicity);
  }
  if (rest != 1) throw Error("factor_order: cycle order with a factor above the rank");
  return factors;
}

std::string factors_to_string(const Factorization& factors) {
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += ' ';
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

BigInt max_achievable_order(int n) {
  if (n < 1) throw RankMismatch("rank must be positive");
  const auto budget = static_cast<std::uint64_t>(n);

  // best odd lcm achievable with a given number of positions, one cycle per
  // odd prime power
  std::vector<BigInt> dp(budget + 1, 1);
  for (const auto q : primes_up_to(budget)) {
    if (q == 2) continue;
    auto next = dp;
    for (std::uint64_t pk = q; pk <= budget; pk *= q) {
      for (std::uint64_t b = pk; b <= budget; ++b) {
        const BigInt candidate = dp[b - pk] * static_cast<unsigned long>(pk);
        if (candidate > next[b]) next[b] = candidate;
      }
      if (pk > budget / q) break;  // pk * q would overflow past the budget
    }
    dp = std::move(next);
  }

  // fold in the power of two. A sign flip on an existing cycle doubles its
  // order for free; higher two-powers 2^a come from a negative cycle of
  // length 2^(a-1).
  BigInt best = dp[budget];
  if (dp[budget] > 1) {
    const BigInt doubled = dp[budget] * 2;
    if (doubled > best) best = doubled;
  } else if (budget >= 1) {
    const BigInt doubled = dp[budget - 1] * 2;  // negative 1-cycle
    if (doubled > best) best = doubled;
  }
  for (std::uint64_t half = 2; half <= budget; half *= 2) {
    const BigInt candidate = dp[budget - half] * static_cast<unsigned long>(2 * half);
    if (candidate > best) best = candidate;
    if (half > budget / 2) break;
  }
  return best;
}

}  // namespace hyperoct
