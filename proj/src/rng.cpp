#include "hyperoct/rng.hpp"

#include <bit>
#include <vector>

#include "hyperoct/errors.hpp"

namespace hyperoct {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValueOutOfRange("Rng::below: bound must be positive");
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound);
  for (;;) {
    const std::uint64_t r = engine_() & mask;
    if (r < bound) return r;
  }
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw ValueOutOfRange("Rng::below: bound must be positive");
  if (bound.fits_ulong_p()) return BigInt(static_cast<unsigned long>(below(bound.get_ui())));

  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = bits % 64;
  const std::uint64_t top_mask = top_bits == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - top_bits));

  std::vector<std::uint64_t> buf(words);
  BigInt draw;
  for (;;) {
    for (auto& w : buf) w = engine_();
    buf.back() &= top_mask;
    // least significant word first, native byte order within a word
    mpz_import(draw.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (draw < bound) return draw;
  }
}

}  // namespace hyperoct
