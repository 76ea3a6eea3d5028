#include "hyperoct/signed_permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <utility>

namespace hyperoct {

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw RankMismatch("rank must be positive");
  std::vector<std::int32_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::from_window(std::vector<std::int32_t> window) {
  const auto n = static_cast<std::int32_t>(window.size());
  if (n == 0) throw RankMismatch("window must be non-empty");
  std::vector<bool> seen(window.size(), false);
  for (const auto v : window) {
    if (v == 0) throw ZeroEntry("window entries must be nonzero");
    const std::int32_t a = v < 0 ? -v : v;
    if (a > n) throw NotAPermutation("window entry out of range: " + std::to_string(v));
    if (seen[a - 1]) throw NotAPermutation("duplicate absolute value: " + std::to_string(a));
    seen[a - 1] = true;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::from_window(int n, std::vector<std::int32_t> window) {
  if (static_cast<int>(window.size()) != n)
    throw RankMismatch("window length " + std::to_string(window.size()) +
                       " does not match rank " + std::to_string(n));
  return from_window(std::move(window));
}

SignedPermutation SignedPermutation::from_window_unchecked(std::vector<std::int32_t> window) {
  return SignedPermutation(std::move(window));
}

std::int32_t SignedPermutation::image(std::int32_t i) const {
  const auto n = static_cast<std::int32_t>(window_.size());
  if (i == 0 || i > n || i < -n) throw ValueOutOfRange("image: argument outside [-n, n] \\ {0}");
  return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

bool SignedPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < window_.size(); ++i)
    if (window_[i] != static_cast<std::int32_t>(i) + 1) return false;
  return true;
}

int SignedCycle::sign() const noexcept {
  int s = 1;
  for (const auto e : signs) s *= e;
  return s;
}

std::uint64_t SignedCycle::element_order() const noexcept {
  const auto len = static_cast<std::uint64_t>(support.size());
  return sign() < 0 ? 2 * len : len;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("compose: ranks " + std::to_string(a.rank()) + " and " +
                       std::to_string(b.rank()));
  const auto& wa = a.window();
  const auto& wb = b.window();
  std::vector<std::int32_t> w(wa.size());
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::int32_t v = wa[i];
    w[i] = v > 0 ? wb[v - 1] : -wb[-v - 1];
  }
  return SignedPermutation::from_window_unchecked(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& a) {
  const auto& wa = a.window();
  std::vector<std::int32_t> w(wa.size());
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::int32_t v = wa[i];
    const std::int32_t pos = static_cast<std::int32_t>(i) + 1;
    if (v > 0)
      w[v - 1] = pos;
    else
      w[-v - 1] = -pos;
  }
  return SignedPermutation::from_window_unchecked(std::move(w));
}

SignedPermutation power(const SignedPermutation& a, const BigInt& e) {
  if (e < 0) throw ValueOutOfRange("power: exponent must be non-negative");
  SignedPermutation result = SignedPermutation::identity(a.rank());
  SignedPermutation base = a;
  BigInt rest = e;
  while (rest != 0) {
    if (mpz_odd_p(rest.get_mpz_t())) result = compose(result, base);
    rest >>= 1;
    if (rest != 0) base = compose(base, base);
  }
  return result;
}

std::vector<SignedCycle> cycle_decompose(const SignedPermutation& a) {
  const auto& w = a.window();
  const int n = a.rank();
  std::vector<SignedCycle> cycles;
  std::vector<bool> used(w.size(), false);
  for (int start = 1; start <= n; ++start) {
    if (used[start - 1]) continue;
    SignedCycle cycle;
    std::int32_t cur = start;
    do {
      used[cur - 1] = true;
      cycle.support.push_back(cur);
      const std::int32_t v = w[cur - 1];
      cycle.signs.push_back(v < 0 ? -1 : 1);
      cur = v < 0 ? -v : v;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

SignedPermutation recompose(int n, const std::vector<SignedCycle>& cycles) {
  if (n < 1) throw RankMismatch("rank must be positive");
  std::vector<std::int32_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (const auto& cycle : cycles) {
    if (cycle.support.empty() || cycle.signs.size() != cycle.support.size())
      throw ValueOutOfRange("recompose: malformed cycle");
    const std::size_t len = cycle.support.size();
    for (std::size_t j = 0; j < len; ++j) {
      const std::int32_t from = cycle.support[j];
      const std::int32_t to = cycle.support[(j + 1) % len];
      if (from < 1 || from > n || to < 1 || to > n)
        throw ValueOutOfRange("recompose: support element outside 1..n");
      w[from - 1] = cycle.signs[j] < 0 ? -to : to;
    }
  }
  // overlapping supports surface as duplicate absolute values here
  return SignedPermutation::from_window(std::move(w));
}

BigInt order(const SignedPermutation& a) {
  BigInt result = 1;
  for (const auto& cycle : cycle_decompose(a))
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), cycle.element_order());
  return result;
}

SignedPermutation random_element(int n, Rng& rng) {
  if (n < 1) throw RankMismatch("rank must be positive");
  std::vector<std::int32_t> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  for (std::uint64_t i = static_cast<std::uint64_t>(n) - 1; i > 0; --i) {
    const auto j = rng.below(i + 1);
    std::swap(w[i], w[j]);
  }
  for (auto& v : w)
    if (rng.coin()) v = -v;
  return SignedPermutation::from_window_unchecked(std::move(w));
}

BigInt group_cardinality(int n) {
  if (n < 0) throw ValueOutOfRange("group_cardinality: negative rank");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  result <<= n;
  return result;
}

std::string to_string(const SignedPermutation& a) {
  std::string out;
  const auto& w = a.window();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::vector<std::int32_t> parse_window(const std::string& text) {
  std::vector<std::int32_t> values;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::int32_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("not a window entry: '" + token + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("empty window");
  return values;
}

std::ostream& operator<<(std::ostream& out, const SignedPermutation& a) {
  return out << to_string(a);
}

}  // namespace hyperoct
