#include <doctest.h>

#include <random>

#include "normexp/occurrences.hpp"
#include "normexp/pattern.hpp"
#include "oracles.hpp"

using namespace normexp;

namespace {
FiniteWord w2(std::string_view s) { return FiniteWord::from_digits(Alphabet(2), s); }
FiniteWord w3(std::string_view s) { return FiniteWord::from_digits(Alphabet(3), s); }
}  // namespace

TEST_CASE("aligned occurrences") {
  CHECK(aligned_occurrences(w2("010101"), w2("01")) == 3);
  CHECK(aligned_occurrences(w2("0101"), w2("010")) == 1);
  CHECK(aligned_occurrences(w3("012"), w3("2")) == 1);
  CHECK(aligned_occurrences(w2("1010"), w2("01")) == 0);
  CHECK(aligned_occurrences(w2(""), w2("0")) == 0);
  CHECK_THROWS_AS(aligned_occurrences(w2("01"), w2("")), ArgumentError);
}

TEST_CASE("occurrences") {
  CHECK(occurrences(w2("0000"), w2("00")) == 3);
  CHECK(occurrences(w2("0110"), w2("11")) == 1);
  CHECK(occurrences(w2("010"), w2("01")) == 1);
  CHECK(occurrences(w2("0"), w2("01")) == 0);
  CHECK_THROWS_AS(occurrences(w2("01"), w2("")), ArgumentError);
}

TEST_CASE("counts agree with brute force and occ dominates alocc") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int base = 2 + static_cast<int>(rng() % 2);
    const auto u = oracle::random_word(rng, base, rng() % 30);
    const auto v = oracle::random_word(rng, base, rng() % 3 + 1);
    const auto a = aligned_occurrences(oracle::to_word(u, base), oracle::to_word(v, base));
    const auto o = occurrences(oracle::to_word(u, base), oracle::to_word(v, base));
    CHECK(a == oracle::alocc(u, v));
    CHECK(o == oracle::occ(u, v));
    CHECK(o >= a);
  }
}

TEST_CASE("discrepancy examples") {
  auto r = discrepancy(w2("0011"), 1);
  CHECK(r.delta == 0);
  CHECK(r.blocks_seen == 4);

  r = discrepancy(w2("0001"), 1);
  CHECK(r.delta == Rational(1, 4));
  CHECK(r.witness.to_digits() == "0");

  const PatternWord w = champernowne_like(2, 2);
  r = discrepancy(w.word(), 2);
  CHECK(r.delta == 0);
  CHECK(r.witness.to_digits() == "00");

  CHECK_THROWS_AS(discrepancy(w2("0"), 2), ArgumentError);
  CHECK_THROWS_AS(discrepancy(w2("01"), 0), ArgumentError);
}

TEST_CASE("discrepancy matches the brute-force oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int base = 2 + static_cast<int>(rng() % 2);
    const int len = 1 + static_cast<int>(rng() % 3);
    const auto u = oracle::random_word(rng, base, static_cast<std::size_t>(len) + rng() % 40);
    const auto expect = oracle::discrepancy(u, base, len);
    const auto got = discrepancy(oracle::to_word(u, base), static_cast<std::size_t>(len));
    REQUIRE(got.delta == expect.delta);
    CHECK(oracle::of(got.witness) == expect.witness);
    CHECK(got.delta >= 0);
    CHECK(got.delta <= 1);
  }
}

TEST_CASE("sparse and dense tables agree") {
  std::mt19937_64 rng(13);
  const TableOptions sparse{1, true};
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = oracle::to_word(oracle::random_word(rng, 3, 60), 3);
    const std::size_t len = 1 + rng() % 3;
    const auto a = discrepancy(u, len);
    const auto b = discrepancy(u, len, sparse);
    CHECK(a.delta == b.delta);
    CHECK(a.witness == b.witness);
  }
  OccurrenceTable t(Alphabet(2), 3, sparse);
  CHECK_FALSE(t.dense());
  CHECK_THROWS_AS(OccurrenceTable(Alphabet(2), 3, TableOptions{4, false}), ResourceError);
}

TEST_CASE("occurrence table invariants") {
  OccurrenceTable t(Alphabet(2), 2);
  CHECK_THROWS_AS(t.delta(), ArgumentError);
  t.push(w2("00011").symbols());
  CHECK(t.blocks_seen() == 2);
  CHECK(t.consumed() == 5);
  CHECK(t.count(w2("00").symbols()) == 1);
  CHECK(t.count(w2("01").symbols()) == 1);
  CHECK(t.max_count() == 1);
  CHECK(t.min_count() == 0);
  CHECK(t.delta() == Rational(1, 4));
  CHECK(t.delta_below(Rational(1, 3)));
  CHECK_FALSE(t.delta_below(Rational(1, 4)));
  CHECK_THROWS_AS(t.push(Symbol{2}), ArgumentError);
}

TEST_CASE("discrepancy series") {
  CyclicStream alt(w2("01"));
  const std::vector<std::uint64_t> cps{2, 4, 6};
  for (const auto& r : discrepancy_series(alt, 1, cps)) CHECK(r.delta == 0);

  CyclicStream rep(w2("0001"));
  const std::vector<std::uint64_t> four{4};
  const auto r = discrepancy_series(rep, 2, four);
  REQUIRE(r.size() == 1);
  CHECK(r[0].delta == Rational(1, 4));

  ChampernowneStream champ(2);
  const std::vector<std::uint64_t> big{1000, 100000};
  const auto c = discrepancy_series(champ, 1, big);
  CHECK(c[1].delta < c[0].delta);
}

TEST_CASE("discrepancy series equals batch discrepancy on every prefix") {
  std::mt19937_64 rng(14);
  const auto u = oracle::to_word(oracle::random_word(rng, 3, 200), 3);
  std::vector<std::uint64_t> cps;
  for (std::uint64_t k = 2; k <= 200; k += 7) cps.push_back(k);
  WordStream s(u);
  const auto series = discrepancy_series(s, 2, cps);
  REQUIRE(series.size() == cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const auto batch = discrepancy(prefix(u, cps[i]), 2);
    CHECK(series[i].delta == batch.delta);
    CHECK(series[i].witness == batch.witness);
    CHECK(series[i].symbols == cps[i]);
  }
}

TEST_CASE("discrepancy series errors") {
  WordStream s(w2("010101"));
  const std::vector<std::uint64_t> cps{2, 4, 8};
  try {
    discrepancy_series(s, 1, cps);
    FAIL("expected truncation");
  } catch (const TruncationError& e) {
    CHECK(e.partial().size() == 2);
  }
  WordStream t(w2("0101"));
  const std::vector<std::uint64_t> unordered{4, 2};
  CHECK_THROWS_AS(discrepancy_series(t, 1, unordered), ArgumentError);
  const std::vector<std::uint64_t> too_short{1};
  CHECK_THROWS_AS(discrepancy_series(t, 2, too_short), ArgumentError);
}

TEST_CASE("hot spot statistic") {
  CHECK(hot_spot_statistic(w2("01"), 1) == 1);
  CHECK(hot_spot_statistic(w2("00"), 1) == 2);

  // w_3 over three symbols, all words of length <= 2.
  const PatternWord w = champernowne_like(3, 2);
  const Rational got = hot_spot_statistic(w.word(), 2);
  CHECK(got == oracle::hot_spot(oracle::of(w.word()), 3, 2));
  CHECK(got <= 2);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = oracle::random_word(rng, 2, 3 + rng() % 40);
    CHECK(hot_spot_statistic(oracle::to_word(u, 2), 3) == oracle::hot_spot(u, 2, 3));
  }
}

TEST_CASE("sliding counter") {
  SlidingCounter c(Alphabet(2), 2);
  const FiniteWord u = w2("00010");
  for (Symbol s : u.symbols()) c.push(s);
  CHECK(c.count(w2("00").symbols()) == 2);
  CHECK(c.count(w2("01").symbols()) == 1);
  CHECK(c.count(w2("10").symbols()) == 1);
  CHECK(c.count(w2("11").symbols()) == 0);
  CHECK(c.max_count() == 2);
}
