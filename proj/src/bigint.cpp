#include "hyperoct/bigint.hpp"

#include "hyperoct/errors.hpp"

namespace hyperoct {

BigInt invert_mod(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw ValueOutOfRange("invert_mod: modulus must be positive");
  if (m == 1) return BigInt(0);
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ModuliNotCoprime("invert_mod: argument shares a factor with the modulus");
  return inv;
}

BigInt isqrt_ceil(const BigInt& n) {
  if (n < 0) throw ValueOutOfRange("isqrt_ceil: negative argument");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root < n) ++root;
  return root;
}

}  // namespace hyperoct
