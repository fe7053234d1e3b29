#include <doctest.h>

#include <random>
#include <sstream>

#include "normexp/stream.hpp"
#include "normexp/words.hpp"
#include "oracles.hpp"

using namespace normexp;

namespace {
FiniteWord w2(std::string_view s) { return FiniteWord::from_digits(Alphabet(2), s); }
FiniteWord w3(std::string_view s) { return FiniteWord::from_digits(Alphabet(3), s); }
}  // namespace

TEST_CASE("alphabet bounds") {
  CHECK_THROWS_AS(Alphabet(1), ArgumentError);
  CHECK_THROWS_AS(Alphabet(257), ArgumentError);
  CHECK(Alphabet(2).expanded() == Alphabet(3));
  CHECK(Alphabet(3).reduced() == Alphabet(2));
  CHECK_THROWS_AS(Alphabet(2).reduced(), ArgumentError);
  CHECK_THROWS_AS(Alphabet(256).expanded(), ArgumentError);
  CHECK(Alphabet(3).contains(2));
  CHECK_FALSE(Alphabet(3).contains(3));
}

TEST_CASE("finite word construction") {
  CHECK_THROWS_AS(FiniteWord(Alphabet(2), {0, 2}), ArgumentError);
  CHECK_THROWS_AS(w2("012"), ArgumentError);
  CHECK_THROWS_AS(FiniteWord::from_digits(Alphabet(2), "0a"), ArgumentError);
  const FiniteWord w = w3("012");
  CHECK(w.size() == 3);
  CHECK(w.at(1) == 0);
  CHECK(w.at(3) == 2);
  CHECK_THROWS_AS(w.at(0), RangeError);
  CHECK_THROWS_AS(w.at(4), RangeError);
  CHECK(w.to_digits() == "012");
  CHECK(FiniteWord(Alphabet(2)).empty());
}

TEST_CASE("substring") {
  CHECK(substring(w3("012102"), 1, 3).to_digits() == "012");
  CHECK(substring(w3("012102"), 4, 6).to_digits() == "102");
  CHECK(substring(w2("0110"), 2, 2).to_digits() == "1");
  CHECK_THROWS_AS(substring(w2("0110"), 0, 2), RangeError);
  CHECK_THROWS_AS(substring(w2("0110"), 2, 5), RangeError);
  CHECK_THROWS_AS(substring(w2("0110"), 3, 2), RangeError);
}

TEST_CASE("prefix and drop_suffix") {
  CHECK(prefix(w2("0001"), 2).to_digits() == "00");
  CHECK(prefix(w2("0001"), 0).empty());
  CHECK(prefix(w3("012"), 3).to_digits() == "012");
  CHECK_THROWS_AS(prefix(w2("0001"), 5), RangeError);

  CHECK(drop_suffix(w2("0001"), 1).to_digits() == "000");
  CHECK(drop_suffix(w2("0001"), 4).empty());
  CHECK(drop_suffix(w2("0001"), 0).to_digits() == "0001");
  CHECK_THROWS_AS(drop_suffix(w2("0001"), 5), RangeError);
}

TEST_CASE("concat") {
  CHECK(concat(w2("01"), w2("10")).to_digits() == "0110");
  CHECK_THROWS_AS(concat(w2("01"), w3("2")), ArgumentError);
}

TEST_CASE("lex_unrank examples") {
  CHECK(lex_unrank(Alphabet(3), 2, 0).to_digits() == "00");
  CHECK(lex_unrank(Alphabet(3), 2, 5).to_digits() == "12");
  CHECK(lex_unrank(Alphabet(2), 3, 7).to_digits() == "111");
  CHECK_THROWS_AS(lex_unrank(Alphabet(2), 3, 8), RangeError);
  CHECK(lex_unrank(Alphabet(2), 0, 0).empty());
}

TEST_CASE("lex_unrank matches the enumeration oracle") {
  for (int base : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      const auto words = oracle::all_words(base, n);
      for (std::size_t r = 0; r < words.size(); ++r) {
        const FiniteWord w = lex_unrank(Alphabet(base), n, r);
        REQUIRE(oracle::of(w) == words[r]);
        CHECK(lex_rank(Alphabet(base), w.symbols()) == r);
        if (r > 0) CHECK(oracle::of(lex_unrank(Alphabet(base), n, r - 1)) < words[r]);
      }
    }
  }
}

TEST_CASE("substring and prefix properties on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = rng() % 20 + 1;
    const FiniteWord w = oracle::to_word(oracle::random_word(rng, 3, len), 3);
    const std::size_t i = rng() % len + 1;
    const std::size_t j = i + rng() % (len - i + 1);
    CHECK(substring(w, i, j).size() == j - i + 1);
    const std::size_t n = rng() % (len + 1);
    const FiniteWord rest = n == len ? FiniteWord(w.alphabet()) : substring(w, n + 1, len);
    CHECK(concat(prefix(w, n), rest) == w);
    CHECK(drop_suffix(w, len - n) == prefix(w, n));
  }
}

TEST_CASE("checked_power") {
  CHECK(checked_power(3, 4) == 81);
  CHECK(checked_power(2, 63) == (std::uint64_t{1} << 63));
  CHECK(checked_power(2, 64) == 0);
  CHECK(checked_power(5, 0) == 1);
}

TEST_CASE("basic streams") {
  WordStream ws(w2("011"));
  CHECK(take(ws, 10).to_digits() == "011");
  CHECK(ws.position() == 3);
  CHECK_FALSE(ws.next().has_value());

  CyclicStream cs(w2("01"));
  CHECK(take(cs, 5).to_digits() == "01010");
  CHECK_THROWS_AS(CyclicStream(FiniteWord(Alphabet(2))), ArgumentError);

  TakeStream ts(std::make_unique<CyclicStream>(w2("1")), 4);
  CHECK(take(ts, 100).to_digits() == "1111");
}

TEST_CASE("istream digit stream") {
  std::istringstream ascii("01\n10\r\n2");
  IstreamDigitStream a(Alphabet(2), ascii, DigitFormat::ascii);
  CHECK(take(a, 4).to_digits() == "0110");
  CHECK_THROWS_AS(a.next(), ArgumentError);

  std::istringstream bin(std::string("\x00\x02\x01", 3));
  IstreamDigitStream b(Alphabet(3), bin, DigitFormat::binary);
  CHECK(take(b, 10).to_digits() == "021");

  std::istringstream bad(std::string("\x05", 1));
  IstreamDigitStream c(Alphabet(3), bad, DigitFormat::binary);
  CHECK_THROWS_AS(c.next(), ArgumentError);
}
