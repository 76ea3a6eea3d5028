#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "hyperoct/codec.hpp"

using namespace hyperoct;

TEST_SUITE_BEGIN("codec");

TEST_CASE("integer to digits") {
  CHECK(int_to_digits(0).digits == std::vector<std::uint64_t>{0});
  CHECK(int_to_digits(9).digits == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(digits_to_string(int_to_digits(9)) == "1:0:1");
  // B_3 - 1 carries the maximal three-digit string
  CHECK(int_to_digits(47).digits == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(digits_to_string(int_to_digits(47)) == "5:3:1");
  CHECK_THROWS_AS(int_to_digits(BigInt(-1)), ValueOutOfRange);
}

TEST_CASE("digits to integer") {
  CHECK(digits_to_int(HyperoctDigits{{0}}) == 0);
  CHECK(digits_to_int(digits_from_string("1:0:1")) == 9);
  CHECK(digits_to_int(digits_from_string("5:3:1")) == 47);
  CHECK_THROWS_AS(digits_to_int(HyperoctDigits{{3}}), DigitOutOfRange);
  CHECK_THROWS_AS(HyperoctDigits::from_digits({0, 5}), DigitOutOfRange);
  // padded high zeros are tolerated and ignored
  CHECK(digits_to_int(HyperoctDigits{{1, 0, 1, 0, 0}}) == 9);
}

TEST_CASE("round trip below B_6 is the identity") {
  for (long value = 0; value < 46080; ++value) {
    const auto digits = int_to_digits(value);
    CHECK(digits_to_int(digits) == value);
  }
}

TEST_CASE("all five-digit strings: value bound and uniqueness") {
  // enumerate every (d_0..d_4) with d_i <= 2i+1: exactly B_5 = 3840 strings,
  // evaluating bijectively onto [0, B_5)
  std::set<long> values;
  std::vector<std::uint64_t> d(5);
  for (d[0] = 0; d[0] <= 1; ++d[0])
    for (d[1] = 0; d[1] <= 3; ++d[1])
      for (d[2] = 0; d[2] <= 5; ++d[2])
        for (d[3] = 0; d[3] <= 7; ++d[3])
          for (d[4] = 0; d[4] <= 9; ++d[4]) {
            const BigInt value = digits_to_int(HyperoctDigits{d});
            CHECK(value >= 0);
            CHECK(value < 3840);
            CHECK(values.insert(value.get_si()).second);  // no two strings collide
            // canonical re-encoding reproduces the trimmed digits
            CHECK(int_to_digits(value) == HyperoctDigits{d}.canonical());
          }
  CHECK(values.size() == 3840);
}

TEST_CASE("leading digit bracket on random values") {
  Rng rng(47);
  const BigInt bound = group_cardinality(20);
  for (int trial = 0; trial < 1000; ++trial) {
    const BigInt value = rng.below(bound);
    const auto digits = int_to_digits(value);
    const std::size_t k = digits.size() - 1;
    BigInt place = 1;  // B_k = 2^k * k!
    for (std::size_t i = 1; i <= k; ++i) place *= 2 * i;
    const BigInt leading = digits.digits.back();
    CHECK(leading * place <= value);
    CHECK(value < (leading + 1) * place);
  }
}

TEST_CASE("digit strings parse and print") {
  CHECK(digits_to_string(HyperoctDigits{{0}}) == "0");
  CHECK(digits_from_string("0").digits == std::vector<std::uint64_t>{0});
  CHECK(digits_from_string("5:3:1").digits == std::vector<std::uint64_t>{1, 3, 5});
  CHECK_THROWS_AS(digits_from_string(""), ParseError);
  CHECK_THROWS_AS(digits_from_string("1::0"), ParseError);
  CHECK_THROWS_AS(digits_from_string("1:a"), ParseError);
  CHECK_THROWS_AS(digits_from_string("9"), DigitOutOfRange);
}

TEST_CASE("subexceedant words map to permutations") {
  CHECK(subexceedant_to_perm(SubexceedantFunction::from_word({1, 2, 3})) ==
        SignedPermutation::identity(3));
  CHECK(subexceedant_to_perm(SubexceedantFunction::from_word({1, 1, 2})).window() ==
        std::vector<std::int32_t>{3, 1, 2});
  CHECK(subexceedant_to_perm(SubexceedantFunction::from_word({1, 1, 1})).window() ==
        std::vector<std::int32_t>{2, 3, 1});
  CHECK_THROWS_AS(SubexceedantFunction::from_word({2}), ValueOutOfRange);
  CHECK_THROWS_AS(SubexceedantFunction::from_word({1, 3}), ValueOutOfRange);
  CHECK_THROWS_AS(SubexceedantFunction::from_word({1, 0}), ValueOutOfRange);
}

namespace {

// every subexceedant word on [n], counting order irrelevant
std::vector<std::vector<std::int32_t>> all_subexceedant_words(int n) {
  std::vector<std::vector<std::int32_t>> words{{}};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<std::int32_t>> next;
    for (const auto& w : words)
      for (std::int32_t v = 1; v <= i; ++v) {
        auto extended = w;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    words = std::move(next);
  }
  return words;
}

}  // namespace

TEST_CASE("the subexceedant map is a bijection onto S_n for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto words = all_subexceedant_words(n);
    std::set<std::vector<std::int32_t>> images;
    for (const auto& word : words) {
      const auto f = SubexceedantFunction::from_word(word);
      const auto sigma = subexceedant_to_perm(f);
      CHECK(sigma.window().back() == word.back());  // sigma(n) = f(n)
      CHECK(images.insert(sigma.window()).second);
      // and the peeling construction inverts it
      CHECK(perm_to_subexceedant(sigma).f == word);
    }
    const auto all = testutil::all_unsigned_windows(n);
    CHECK(images.size() == all.size());  // n! words onto n! permutations
  }
}

TEST_CASE("peeling rejects signed input") {
  CHECK_THROWS_AS(perm_to_subexceedant(SignedPermutation::from_window({-1, 2})), SignedInput);
}

TEST_CASE("digit splitting drives signs and the subexceedant word") {
  const auto nine = digits_from_string("1:0:1");
  const auto [f9, eps9] = split_digits(nine, 3);
  CHECK(f9.f == std::vector<std::int32_t>{1, 1, 1});
  CHECK(eps9.signs == std::vector<std::int8_t>{-1, 1, -1});
  CHECK(digits_to_signed_perm(nine, 3).window() == std::vector<std::int32_t>{-2, 3, -1});

  const auto maximal = digits_from_string("5:3:1");
  const auto [f47, eps47] = split_digits(maximal, 3);
  CHECK(f47.f == std::vector<std::int32_t>{1, 2, 3});
  CHECK(eps47.signs == std::vector<std::int8_t>{-1, -1, -1});
  CHECK(digits_to_signed_perm(maximal, 3).window() == std::vector<std::int32_t>{-1, -2, -3});

  CHECK(digits_to_signed_perm(HyperoctDigits{{0, 0, 0}}, 3).window() ==
        std::vector<std::int32_t>{2, 3, 1});

  CHECK(merge_digits(f9, eps9) == HyperoctDigits{{1, 0, 1}});
  CHECK_THROWS_AS(digits_to_signed_perm(int_to_digits(384), 3), TooManyDigits);
}

TEST_CASE("window to digits emits in-range digits") {
  CHECK(signed_perm_to_digits(SignedPermutation::from_window({2, 3, 1})).digits ==
        std::vector<std::uint64_t>{0, 0, 0});
  CHECK(signed_perm_to_digits(SignedPermutation::from_window({-1, -2, -3})).digits ==
        std::vector<std::uint64_t>{1, 3, 5});
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pi = random_element(20, rng);
    const auto digits = signed_perm_to_digits(pi);
    REQUIRE(digits.size() == 20);
    for (std::size_t i = 0; i < digits.size(); ++i) CHECK(digits.digits[i] <= 2 * i + 1);
    CHECK(digits_to_signed_perm(digits, 20) == pi);
  }
}

TEST_CASE("integer-to-element chain at small ranks") {
  CHECK(int_to_signed_perm(0, 3).window() == std::vector<std::int32_t>{2, 3, 1});
  CHECK(int_to_signed_perm(9, 3).window() == std::vector<std::int32_t>{-2, 3, -1});
  CHECK(int_to_signed_perm(47, 3).window() == std::vector<std::int32_t>{-1, -2, -3});
  CHECK(signed_perm_to_int(SignedPermutation::identity(3)) == 36);
  CHECK_THROWS_AS(int_to_signed_perm(48, 3), ValueOutOfRange);
  CHECK_THROWS_AS(int_to_signed_perm(BigInt(-1), 3), ValueOutOfRange);
}

TEST_CASE("the chain is a bijection onto B_4") {
  std::set<std::vector<std::int32_t>> images;
  for (long value = 0; value < 384; ++value) {
    const auto pi = int_to_signed_perm(value, 4);
    CHECK(images.insert(pi.window()).second);
    CHECK(signed_perm_to_int(pi) == value);
  }
  const auto all = testutil::all_signed_windows(4);
  CHECK(images.size() == all.size());
  for (const auto& w : all) CHECK(images.count(w) == 1);
}

TEST_CASE("round trip of every value below B_5") {
  for (long value = 0; value < 3840; ++value)
    CHECK(signed_perm_to_int(int_to_signed_perm(value, 5)) == value);
}

TEST_CASE("block size fits the group cardinality") {
  CHECK(block_size_for_rank(3) == 0);
  CHECK(block_size_for_rank(4) == 1);
  for (int n : {4, 8, 16, 64, 100}) {
    const auto s = block_size_for_rank(n);
    BigInt cap = 1;
    for (std::size_t i = 0; i < s; ++i) cap *= 256;
    CHECK(cap <= group_cardinality(n));
    CHECK(cap * 256 > group_cardinality(n));
  }
}

TEST_CASE("byte blocking round-trips") {
  SUBCASE("empty input is a lone header") {
    const auto units = bytes_to_units({}, 8);
    REQUIRE(units.size() == 1);
    CHECK(units_to_bytes(units, 8).empty());
  }
  SUBCASE("a single zero byte") {
    const std::vector<std::uint8_t> data{0x00};
    const auto units = bytes_to_units(data, 8);
    REQUIRE(units.size() == 2);
    CHECK(signed_perm_to_int(units[1]) == 0);
    CHECK(signed_perm_to_int(units[0]) == block_size_for_rank(8) - 1);  // pad bytes
    CHECK(units_to_bytes(units, 8) == data);
  }
  SUBCASE("rank too small") {
    CHECK_THROWS_AS(bytes_to_units(std::vector<std::uint8_t>{1}, 3), BlockTooLarge);
  }
  SUBCASE("random strings at rank 64") {
    Rng rng(59);
    for (int trial = 0; trial < 10000; ++trial) {
      const std::size_t len = rng.below(std::uint64_t{1025});
      std::vector<std::uint8_t> data(len);
      for (auto& byte : data) byte = static_cast<std::uint8_t>(rng.below(std::uint64_t{256}));
      CHECK(units_to_bytes(bytes_to_units(data, 64), 64) == data);
    }
  }
}

TEST_CASE("unit stream format") {
  Rng rng(61);
  std::vector<std::uint8_t> data(300);
  for (auto& byte : data) byte = static_cast<std::uint8_t>(rng.below(std::uint64_t{256}));
  const auto units = bytes_to_units(data, 16);

  std::stringstream stream;
  write_unit_stream(stream, units, 16);
  const auto parsed = read_unit_stream(stream);
  CHECK(parsed.n == 16);
  CHECK(parsed.block_size == block_size_for_rank(16));
  CHECK(parsed.units == units);
  CHECK(units_to_bytes(parsed.units, parsed.n) == data);

  SUBCASE("magic is checked") {
    std::stringstream bad("XXXX\x00\x10\x00\x05");
    CHECK_THROWS_AS(read_unit_stream(bad), ParseError);
  }
  SUBCASE("truncation is detected") {
    std::string raw = stream.str();
    // the stream was consumed above; rebuild and chop mid-window
    std::stringstream rebuilt;
    write_unit_stream(rebuilt, units, 16);
    raw = rebuilt.str();
    std::stringstream chopped(raw.substr(0, raw.size() - 3));
    CHECK_THROWS_AS(read_unit_stream(chopped), ParseError);
  }
  SUBCASE("corrupt pad header is rejected") {
    auto mangled = units;
    // replace the header with a window whose value exceeds any block size
    mangled[0] = int_to_signed_perm(group_cardinality(16) - 1, 16);
    CHECK_THROWS_AS(units_to_bytes(mangled, 16), ParseError);
  }
}

TEST_SUITE_END();
