#include "hyperoct/attacks.hpp"

#include "hyperoct/basegen.hpp"

namespace hyperoct {

BigInt crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues) {
  BigInt x = 0;
  BigInt modulus = 1;
  for (const auto& [xi, mi] : residues) {
    if (mi <= 0) throw ValueOutOfRange("crt_combine: modulus must be positive");
    if (mi == 1) continue;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), mi.get_mpz_t());
    if (g != 1) throw ModuliNotCoprime("crt_combine: moduli share the factor " + g.get_str());
    // solve x + modulus * t = xi (mod mi)
    BigInt t = ((xi - x) % mi) * invert_mod(modulus % mi, mi) % mi;
    if (t < 0) t += mi;
    x += modulus * t;
    modulus *= mi;
  }
  return x;
}

PermGroupOracle::PermGroupOracle(SignedPermutation generator)
    : generator_(std::move(generator)),
      order_(order(generator_)),
      factors_(factor_order(generator_)) {}

std::string PermGroupOracle::key(const element_type& a) const {
  const auto& w = a.window();
  return std::string(reinterpret_cast<const char*>(w.data()), w.size() * sizeof(w[0]));
}

ModGroupOracle::ModGroupOracle(BigInt modulus, BigInt generator)
    : modulus_(std::move(modulus)), generator_(std::move(generator)) {
  if (modulus_ < 2) throw ValueOutOfRange("modulus must be >= 2");
  if (modulus_ > 10'000'000)
    throw ValueOutOfRange("order derivation by iteration needs a small modulus; "
                          "use the trusted constructor");
  generator_ %= modulus_;
  if (generator_ < 0) generator_ += modulus_;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), generator_.get_mpz_t(), modulus_.get_mpz_t());
  if (g != 1) throw ValueOutOfRange("generator is not a unit modulo the modulus");

  BigInt cur = generator_;
  order_ = 1;
  while (cur != 1) {
    cur = (cur * generator_) % modulus_;
    ++order_;
  }

  // the order is below the modulus cap, so plain trial division factors it
  BigInt rest = order_;
  for (BigInt q = 2; q * q <= rest;) {
    if (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      unsigned multiplicity = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
        rest /= q;
        ++multiplicity;
      }
      factors_.emplace_back(q, multiplicity);
    }
    q += (q == 2) ? 1 : 2;
  }
  if (rest > 1) factors_.emplace_back(rest, 1);
}

ModGroupOracle::ModGroupOracle(BigInt modulus, BigInt generator, BigInt order,
                               Factorization factors)
    : modulus_(std::move(modulus)),
      generator_(std::move(generator)),
      order_(std::move(order)),
      factors_(std::move(factors)) {
  if (modulus_ < 2) throw ValueOutOfRange("modulus must be >= 2");
  if (order_ < 1) throw ValueOutOfRange("order must be positive");
  BigInt check = 1;
  for (const auto& [p, e] : factors_)
    for (unsigned k = 0; k < e; ++k) check *= p;
  if (check != order_)
    throw FactorizationMissing("factorization does not multiply back to the order");
}

}  // namespace hyperoct
