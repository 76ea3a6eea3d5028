#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/errors.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Discrete-log solver outcome. `search_ops` counts the multiplications in
/// the search loops themselves (table building, giant steps, iterated
/// stepping) -- the classic cost measure the solvers are compared by.
/// `total_ops` additionally includes every multiplication spent in setup and
/// verification exponentiations.
struct DlpResult {
  bool found = false;
  BigInt x;
  std::uint64_t search_ops = 0;
  std::uint64_t total_ops = 0;
};

struct PhSubproblem {
  BigInt prime;
  unsigned exponent = 0;
  std::uint64_t search_ops = 0;  // inner baby-step/giant-step work for this prime power
};

struct PhResult {
  bool found = false;
  BigInt x;
  std::uint64_t search_ops = 0;
  std::uint64_t total_ops = 0;
  std::vector<PhSubproblem> subproblems;
};

/// Unique x mod prod(m_i) with x = x_i mod m_i; residues given as
/// (x_i, m_i) pairs with pairwise coprime moduli (ModuliNotCoprime).
BigInt crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues);

/// Requirements on a cyclic-group handle the solvers can run against: the
/// carrier operations, a serialization usable as a lookup-table key, the
/// generator with its (factored) order, and a multiplication counter.
template <class G>
concept CyclicGroupOracle = requires(const G& g, const typename G::element_type& x, const BigInt& e) {
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.op(x, x) } -> std::same_as<typename G::element_type>;
  { g.pow(x, e) } -> std::same_as<typename G::element_type>;
  { g.eq(x, x) } -> std::same_as<bool>;
  { g.key(x) } -> std::same_as<std::string>;
  { g.generator() } -> std::convertible_to<typename G::element_type>;
  { g.generator_order() } -> std::convertible_to<BigInt>;
  { g.order_factors() } -> std::convertible_to<Factorization>;
  { g.op_count() } -> std::same_as<std::uint64_t>;
};

namespace detail {

/// Square-and-multiply routed through the oracle so every multiplication is
/// counted.
template <class G>
typename G::element_type pow_via_op(const G& g, typename G::element_type base, BigInt e) {
  if (e < 0) throw ValueOutOfRange("pow: negative exponent");
  auto result = g.identity();
  while (e != 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = g.op(result, base);
    e >>= 1;
    if (e != 0) base = g.op(base, base);
  }
  return result;
}

}  // namespace detail

/// The cyclic subgroup <beta> of B_n.
class PermGroupOracle {
 public:
  using element_type = SignedPermutation;

  explicit PermGroupOracle(SignedPermutation generator);

  element_type identity() const { return SignedPermutation::identity(generator_.rank()); }
  element_type op(const element_type& a, const element_type& b) const {
    ++ops_;
    return compose(a, b);
  }
  element_type pow(const element_type& a, const BigInt& e) const {
    return detail::pow_via_op(*this, a, e);
  }
  bool eq(const element_type& a, const element_type& b) const { return a == b; }
  std::string key(const element_type& a) const;

  element_type generator() const { return generator_; }
  BigInt generator_order() const { return order_; }
  Factorization order_factors() const { return factors_; }

  std::uint64_t op_count() const { return ops_; }
  void reset_op_count() const { ops_ = 0; }

 private:
  SignedPermutation generator_;
  BigInt order_;
  Factorization factors_;
  mutable std::uint64_t ops_ = 0;
};

/// The cyclic subgroup <g> of the units mod m. Reproduces textbook
/// modular-arithmetic instances next to the permutation ones, so the solvers
/// can be cross-checked on both carriers.
class ModGroupOracle {
 public:
  using element_type = BigInt;

  /// Derives the order of g by iterated multiplication; meant for small
  /// moduli. Requires gcd(g, modulus) = 1.
  ModGroupOracle(BigInt modulus, BigInt generator);

  /// Trusted constructor for prearranged instances.
  ModGroupOracle(BigInt modulus, BigInt generator, BigInt order, Factorization factors);

  element_type identity() const { return BigInt(1); }
  element_type op(const element_type& a, const element_type& b) const {
    ++ops_;
    return (a * b) % modulus_;
  }
  element_type pow(const element_type& a, const BigInt& e) const {
    return detail::pow_via_op(*this, a, e);
  }
  bool eq(const element_type& a, const element_type& b) const { return a == b; }
  std::string key(const element_type& a) const { return a.get_str(16); }

  element_type generator() const { return generator_; }
  BigInt generator_order() const { return order_; }
  Factorization order_factors() const { return factors_; }
  const BigInt& modulus() const { return modulus_; }

  std::uint64_t op_count() const { return ops_; }
  void reset_op_count() const { ops_ = 0; }

 private:
  BigInt modulus_;
  BigInt generator_;
  BigInt order_;
  Factorization factors_;
  mutable std::uint64_t ops_ = 0;
};

/// Iterated multiplication: smallest x in [0, bound) with g^x = y.
/// bound must not exceed the generator order; passing the order itself makes
/// a miss equivalent to y not lying in <g>.
template <CyclicGroupOracle G>
DlpResult dlp_bruteforce(const G& group, const typename G::element_type& y, const BigInt& bound) {
  if (bound < 0 || bound > group.generator_order())
    throw ValueOutOfRange("dlp_bruteforce: bound must lie in [0, generator_order]");
  const std::uint64_t start_ops = group.op_count();
  DlpResult res;
  auto cur = group.identity();
  const auto g = group.generator();
  for (BigInt x = 0; x < bound; ++x) {
    if (group.eq(cur, y)) {
      res.found = true;
      res.x = x;
      break;
    }
    cur = group.op(cur, g);
    ++res.search_ops;
  }
  if (res.found && !group.eq(group.pow(g, res.x), y)) res.found = false;
  res.total_ops = group.op_count() - start_ops;
  return res;
}

/// Baby-step giant-step relative to an explicit base of known order; the
/// workhorse shared by bsgs() and the Pohlig-Hellman inner solves. Table
/// holds ceil(sqrt(order)) baby steps; giant steps multiply by base^(-m).
template <CyclicGroupOracle G>
DlpResult bsgs_in(const G& group, const typename G::element_type& base, const BigInt& base_order,
                  const typename G::element_type& y) {
  if (base_order < 1) throw ValueOutOfRange("bsgs: order must be positive");
  const std::uint64_t start_ops = group.op_count();
  DlpResult res;

  const BigInt m_big = isqrt_ceil(base_order);
  if (m_big > (1 << 26)) throw Error("bsgs: baby-step table would not fit in memory");
  const std::uint64_t m = m_big.get_ui();

  std::unordered_map<std::string, std::uint64_t> table;
  table.reserve(m);
  auto cur = group.identity();
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(group.key(cur), j);
    if (j + 1 < m) {
      cur = group.op(cur, base);
      ++res.search_ops;
    }
  }

  const auto stride = group.pow(base, base_order - m_big);  // base^(-m)
  cur = y;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = table.find(group.key(cur)); it != table.end()) {
      res.found = true;
      res.x = BigInt(i) * m_big + it->second;
      break;
    }
    cur = group.op(cur, stride);
    ++res.search_ops;
  }

  if (res.found && !group.eq(group.pow(base, res.x), y)) res.found = false;
  res.total_ops = group.op_count() - start_ops;
  return res;
}

template <CyclicGroupOracle G>
DlpResult bsgs(const G& group, const typename G::element_type& y) {
  return bsgs_in(group, group.generator(), group.generator_order(), y);
}

/// Pohlig-Hellman reduction: solve x mod p^e for every prime power in the
/// order, each digit lifted through an inner BSGS in the order-p subgroup,
/// then recombine with the CRT. Returns NotFound (found = false) after a
/// failed final verification, which covers y outside <g>.
template <CyclicGroupOracle G>
PhResult pohlig_hellman(const G& group, const typename G::element_type& y) {
  const std::uint64_t start_ops = group.op_count();
  PhResult res;
  const auto g = group.generator();
  const BigInt n = group.generator_order();

  if (n == 1) {
    res.found = group.eq(y, group.identity());
    res.x = 0;
    res.total_ops = group.op_count() - start_ops;
    return res;
  }

  const Factorization factors = group.order_factors();
  BigInt check = 1;
  for (const auto& [p, e] : factors)
    for (unsigned k = 0; k < e; ++k) check *= p;
  if (check != n)
    throw FactorizationMissing("pohlig_hellman: order factorization absent or incomplete");

  std::vector<std::pair<BigInt, BigInt>> residues;
  for (const auto& [p, e] : factors) {
    BigInt pe = 1;
    for (unsigned k = 0; k < e; ++k) pe *= p;
    const BigInt cofactor = n / pe;
    const auto g_p = group.pow(g, cofactor);
    const auto y_p = group.pow(y, cofactor);
    const auto gamma = group.pow(g_p, pe / p);  // order exactly p

    PhSubproblem sub{p, e, 0};
    BigInt x_pe = 0;
    BigInt pk = 1;  // p^k
    for (unsigned k = 0; k < e; ++k) {
      // h = (y_p * g_p^(-x_pe))^(p^(e-1-k)) lies in <gamma>
      const BigInt neg = (pe - x_pe % pe) % pe;
      const auto shifted = group.op(y_p, group.pow(g_p, neg));
      const auto h = group.pow(shifted, pe / (pk * p));
      const DlpResult digit = bsgs_in(group, gamma, p, h);
      sub.search_ops += digit.search_ops;
      if (!digit.found) {
        res.subproblems.push_back(sub);
        res.search_ops += sub.search_ops;
        res.total_ops = group.op_count() - start_ops;
        return res;  // y has no logarithm to base g
      }
      x_pe += digit.x * pk;
      pk *= p;
    }
    residues.emplace_back(x_pe, pe);
    res.search_ops += sub.search_ops;
    res.subproblems.push_back(std::move(sub));
  }

  res.x = crt_combine(residues);
  res.found = group.eq(group.pow(g, res.x), y);
  res.total_ops = group.op_count() - start_ops;
  return res;
}

}  // namespace hyperoct
