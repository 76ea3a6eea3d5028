#include "hyperoct/codec.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "hyperoct/errors.hpp"

namespace hyperoct {

namespace {

void check_digit_range(const std::vector<std::uint64_t>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] > 2 * i + 1)
      throw DigitOutOfRange("digit d_" + std::to_string(i) + " = " + std::to_string(digits[i]) +
                            " exceeds " + std::to_string(2 * i + 1));
}

void put_u16_be(std::ostream& out, std::uint16_t v) {
  const char bytes[2] = {static_cast<char>(v >> 8), static_cast<char>(v & 0xff)};
  out.write(bytes, 2);
}

std::uint16_t get_u16_be(std::istream& in) {
  unsigned char bytes[2];
  if (!in.read(reinterpret_cast<char*>(bytes), 2)) throw ParseError("unit stream truncated");
  return static_cast<std::uint16_t>((bytes[0] << 8) | bytes[1]);
}

constexpr char kStreamMagic[4] = {'H', 'O', 'B', '1'};

}  // namespace

HyperoctDigits HyperoctDigits::from_digits(std::vector<std::uint64_t> digits) {
  check_digit_range(digits);
  return HyperoctDigits{std::move(digits)};
}

HyperoctDigits HyperoctDigits::canonical() const {
  auto out = digits;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (out.empty()) out.push_back(0);
  return HyperoctDigits{std::move(out)};
}

SubexceedantFunction SubexceedantFunction::from_word(std::vector<std::int32_t> f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < 1 || f[i] > static_cast<std::int32_t>(i) + 1)
      throw ValueOutOfRange("f(" + std::to_string(i + 1) + ") = " + std::to_string(f[i]) +
                            " violates 1 <= f(i) <= i");
  return SubexceedantFunction{std::move(f)};
}

HyperoctDigits int_to_digits(const BigInt& value) {
  if (value < 0) throw ValueOutOfRange("int_to_digits: negative value");
  std::vector<std::uint64_t> digits;
  BigInt quotient = value;
  unsigned long divisor = 2;  // 2(i+1) at position i
  do {
    digits.push_back(mpz_fdiv_q_ui(quotient.get_mpz_t(), quotient.get_mpz_t(), divisor));
    divisor += 2;
  } while (quotient != 0);
  return HyperoctDigits{std::move(digits)};
}

BigInt digits_to_int(const HyperoctDigits& d) {
  check_digit_range(d.digits);
  if (d.digits.empty()) return BigInt(0);
  const std::size_t k = d.digits.size();
  BigInt acc = d.digits.back();
  for (std::size_t i = k - 1; i >= 1; --i) {
    acc *= 2 * i;
    acc += d.digits[i - 1];
  }
  return acc;
}

std::string digits_to_string(const HyperoctDigits& d) {
  if (d.digits.empty()) return "0";
  std::string out;
  for (std::size_t i = d.digits.size(); i-- > 0;) {
    out += std::to_string(d.digits[i]);
    if (i != 0) out += ':';
  }
  return out;
}

HyperoctDigits digits_from_string(const std::string& text) {
  std::vector<std::uint64_t> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(':', pos), text.size());
    std::uint64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + next;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
      throw ParseError("not a digit string: '" + text + "'");
    digits.push_back(v);
    pos = next + 1;
  }
  std::reverse(digits.begin(), digits.end());
  return HyperoctDigits::from_digits(std::move(digits));
}

SignedPermutation subexceedant_to_perm(const SubexceedantFunction& f) {
  const auto n = static_cast<std::int32_t>(f.size());
  if (n == 0) throw RankMismatch("empty subexceedant function");
  std::vector<std::int32_t> w(f.size()), pos(f.size());
  for (std::int32_t i = 0; i < n; ++i) w[i] = pos[i] = i + 1;
  // apply (i f(i)) after the product built so far: values i and f(i) swap
  for (std::int32_t i = 1; i <= n; ++i) {
    const std::int32_t a = i;
    const std::int32_t b = f.f[i - 1];
    if (b < 1 || b > i) throw ValueOutOfRange("subexceedant bound violated at i=" + std::to_string(i));
    if (a != b) {
      const std::int32_t ia = pos[a - 1] - 1;
      const std::int32_t ib = pos[b - 1] - 1;
      std::swap(w[ia], w[ib]);
      std::swap(pos[a - 1], pos[b - 1]);
    }
  }
  return SignedPermutation::from_window_unchecked(std::move(w));
}

SubexceedantFunction perm_to_subexceedant(const SignedPermutation& sigma) {
  const auto& win = sigma.window();
  const auto n = static_cast<std::int32_t>(win.size());
  for (const auto v : win)
    if (v < 0) throw SignedInput("perm_to_subexceedant: window has a negative entry");

  std::vector<std::int32_t> w = win, pos(win.size());
  for (std::int32_t i = 0; i < n; ++i) pos[w[i] - 1] = i + 1;
  std::vector<std::int32_t> f(win.size());
  for (std::int32_t i = n; i >= 1; --i) {
    const std::int32_t b = w[i - 1];
    f[i - 1] = b;
    if (b != i) {  // multiply on the right by (i b): exchanges the values i and b
      const std::int32_t ia = pos[i - 1] - 1;
      const std::int32_t ib = pos[b - 1] - 1;
      std::swap(w[ia], w[ib]);
      std::swap(pos[i - 1], pos[b - 1]);
    }
  }
  return SubexceedantFunction{std::move(f)};
}

std::pair<SubexceedantFunction, SignVector> split_digits(const HyperoctDigits& d, int n) {
  if (n < 1) throw RankMismatch("rank must be positive");
  const auto canonical = d.canonical();
  if (canonical.size() > static_cast<std::size_t>(n))
    throw TooManyDigits("value needs " + std::to_string(canonical.size()) +
                        " digits, rank carries " + std::to_string(n));
  check_digit_range(d.digits);

  SubexceedantFunction f;
  SignVector eps;
  f.f.resize(static_cast<std::size_t>(n));
  eps.signs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t digit = i < static_cast<int>(d.size()) ? d.digits[i] : 0;
    f.f[i] = static_cast<std::int32_t>(digit / 2) + 1;
    eps.signs[i] = (digit & 1) ? -1 : 1;
  }
  return {std::move(f), std::move(eps)};
}

HyperoctDigits merge_digits(const SubexceedantFunction& f, const SignVector& eps) {
  if (f.size() != eps.signs.size()) throw RankMismatch("merge_digits: length mismatch");
  std::vector<std::uint64_t> digits(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.f[i] < 1 || f.f[i] > static_cast<std::int32_t>(i) + 1)
      throw ValueOutOfRange("merge_digits: subexceedant bound violated");
    digits[i] = 2 * (static_cast<std::uint64_t>(f.f[i]) - 1) + (eps.signs[i] < 0 ? 1 : 0);
  }
  return HyperoctDigits{std::move(digits)};
}

SignedPermutation digits_to_signed_perm(const HyperoctDigits& d, int n) {
  const auto [f, eps] = split_digits(d, n);
  const auto sigma = subexceedant_to_perm(f);
  std::vector<std::int32_t> w = sigma.window();
  for (int i = 0; i < n; ++i)
    if (eps.signs[i] < 0) w[i] = -w[i];
  return SignedPermutation::from_window_unchecked(std::move(w));
}

HyperoctDigits signed_perm_to_digits(const SignedPermutation& pi) {
  const auto& win = pi.window();
  std::vector<std::int32_t> abs_window(win.size());
  SignVector eps;
  eps.signs.resize(win.size());
  for (std::size_t i = 0; i < win.size(); ++i) {
    abs_window[i] = win[i] < 0 ? -win[i] : win[i];
    eps.signs[i] = win[i] < 0 ? -1 : 1;
  }
  const auto f = perm_to_subexceedant(SignedPermutation::from_window_unchecked(std::move(abs_window)));
  return merge_digits(f, eps);
}

SignedPermutation int_to_signed_perm(const BigInt& value, int n) {
  if (n < 1) throw RankMismatch("rank must be positive");
  if (value < 0 || value >= group_cardinality(n))
    throw ValueOutOfRange("int_to_signed_perm: value outside [0, B_n)");
  return digits_to_signed_perm(int_to_digits(value), n);
}

BigInt signed_perm_to_int(const SignedPermutation& pi) {
  return digits_to_int(signed_perm_to_digits(pi));
}

std::size_t block_size_for_rank(int n) {
  if (n < 1) throw RankMismatch("rank must be positive");
  const BigInt cardinality = group_cardinality(n);
  std::size_t s = 0;
  BigInt cap = 1;
  while (cap * 256 <= cardinality) {
    cap *= 256;
    ++s;
  }
  return s;
}

std::vector<SignedPermutation> bytes_to_units(std::span<const std::uint8_t> data, int n) {
  const std::size_t block = block_size_for_rank(n);
  if (block == 0)
    throw BlockTooLarge("rank " + std::to_string(n) + " cannot carry a one-byte block");

  const std::size_t blocks = (data.size() + block - 1) / block;
  const std::size_t pad = blocks * block - data.size();

  std::vector<SignedPermutation> units;
  units.reserve(blocks + 1);
  units.push_back(int_to_signed_perm(BigInt(static_cast<unsigned long>(pad)), n));

  std::vector<std::uint8_t> buf(block);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::fill(buf.begin(), buf.end(), 0);
    const std::size_t offset = b * block;
    const std::size_t take = std::min(block, data.size() - offset);
    std::copy_n(data.begin() + offset, take, buf.begin());
    BigInt value;
    mpz_import(value.get_mpz_t(), block, 1, 1, 0, 0, buf.data());  // big-endian bytes
    units.push_back(int_to_signed_perm(value, n));
  }
  return units;
}

std::vector<std::uint8_t> units_to_bytes(const std::vector<SignedPermutation>& units, int n) {
  if (units.empty()) throw ParseError("unit list lacks the pad header");
  const std::size_t block = block_size_for_rank(n);
  if (block == 0)
    throw BlockTooLarge("rank " + std::to_string(n) + " cannot carry a one-byte block");

  for (const auto& u : units)
    if (u.rank() != n)
      throw RankMismatch("unit of rank " + std::to_string(u.rank()) + " in a rank-" +
                         std::to_string(n) + " stream");

  const BigInt pad_value = signed_perm_to_int(units[0]);
  if (pad_value >= static_cast<unsigned long>(block))
    throw ParseError("pad count " + pad_value.get_str() + " exceeds block size");
  const std::size_t pad = pad_value.get_ui();

  BigInt limit = 1;
  for (std::size_t i = 0; i < block; ++i) limit *= 256;

  std::vector<std::uint8_t> out;
  out.reserve((units.size() - 1) * block);
  std::vector<std::uint8_t> bytes(block);
  for (std::size_t u = 1; u < units.size(); ++u) {
    const BigInt value = signed_perm_to_int(units[u]);
    if (value >= limit) throw BlockTooLarge("unit value does not fit the block size");
    std::fill(bytes.begin(), bytes.end(), 0);
    if (value > 0) {
      // big-endian export of the significant bytes, right-aligned in the block
      const std::size_t significant = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
      std::size_t written = 0;
      mpz_export(bytes.data() + (block - significant), &written, 1, 1, 0, 0, value.get_mpz_t());
    }
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  if (pad > out.size()) throw ParseError("pad count exceeds payload");
  out.resize(out.size() - pad);
  return out;
}

void write_unit_stream(std::ostream& out, const std::vector<SignedPermutation>& units, int n) {
  if (n < 1 || n > 0xffff) throw ValueOutOfRange("stream rank must fit 16 bits");
  for (const auto& u : units)
    if (u.rank() != n) throw RankMismatch("unit rank does not match stream rank");
  out.write(kStreamMagic, 4);
  put_u16_be(out, static_cast<std::uint16_t>(n));
  put_u16_be(out, static_cast<std::uint16_t>(block_size_for_rank(n)));
  for (const auto& u : units) {
    for (const auto v : u.window()) {
      const auto uv = static_cast<std::uint32_t>(v);
      const char bytes[4] = {static_cast<char>(uv >> 24), static_cast<char>((uv >> 16) & 0xff),
                             static_cast<char>((uv >> 8) & 0xff), static_cast<char>(uv & 0xff)};
      out.write(bytes, 4);
    }
  }
  if (!out) throw Error("unit stream write failed");
}

UnitStream read_unit_stream(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kStreamMagic))
    throw ParseError("bad unit stream magic");
  UnitStream stream;
  stream.n = get_u16_be(in);
  stream.block_size = get_u16_be(in);
  if (stream.n < 1) throw ParseError("unit stream rank must be positive");
  if (stream.block_size != block_size_for_rank(stream.n))
    throw ParseError("unit stream block size does not match its rank");

  std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t bytes_per_unit = 4 * static_cast<std::size_t>(stream.n);
  if (raw.size() % bytes_per_unit != 0) throw ParseError("unit stream truncated mid-window");

  for (std::size_t offset = 0; offset < raw.size(); offset += bytes_per_unit) {
    std::vector<std::int32_t> w(static_cast<std::size_t>(stream.n));
    for (int i = 0; i < stream.n; ++i) {
      const std::size_t p = offset + 4 * static_cast<std::size_t>(i);
      const std::uint32_t uv = (static_cast<std::uint32_t>(raw[p]) << 24) |
                               (static_cast<std::uint32_t>(raw[p + 1]) << 16) |
                               (static_cast<std::uint32_t>(raw[p + 2]) << 8) |
                               static_cast<std::uint32_t>(raw[p + 3]);
      w[i] = static_cast<std::int32_t>(uv);
    }
    stream.units.push_back(SignedPermutation::from_window(std::move(w)));
  }
  return stream;
}

}  // namespace hyperoct
