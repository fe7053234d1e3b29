// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "normexp/expander.hpp"
#include "normexp/verify.hpp"

using namespace normexp;
namespace nv = normexp::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

void absorb(Outcome& o, const std::vector<nv::OracleReport>& reports, std::uint64_t min_instances = 0) {
  for (const auto& r : reports) {
    const std::string tag = r.claim + "(" + r.parameters + ")";
    o.require(r.passed(), tag + " violated: " + (r.violations.empty() ? "" : r.violations.front()));
    o.require(r.instances >= min_instances,
              tag + " only " + std::to_string(r.instances) + " instances");
  }
}

std::uint64_t total_instances(const std::vector<nv::OracleReport>& reports) {
  std::uint64_t n = 0;
  for (const auto& r : reports) n += r.instances;
  return n;
}

// 1. Counting identity, exhaustive.
Outcome counting_identity() {
  Outcome o;
  std::vector<nv::OracleReport> reports;
  for (auto [b, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}}) reports.push_back(nv::check_counting_identity(b, n));
  absorb(o, reports);
  o.require(reports[1].instances == 4096, "(2,2) did not enumerate 4096 sources");
  o.note(std::to_string(total_instances(reports)) + " expansions");
  return o;
}

// 2. Retraction.
Outcome retraction() {
  Outcome o;
  nv::OracleOptions opt;
  opt.trials = 1000;
  std::vector<nv::OracleReport> reports;
  for (auto [b, n] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 1u}, {3u, 2u}}) {
    reports.push_back(nv::check_retraction(b, n, opt));
  }
  absorb(o, reports, 1000);
  o.note(std::to_string(total_instances(reports)) + " words");
  return o;
}

// 3. Pattern words have zero discrepancy at their order.
Outcome pattern_discrepancy() {
  Outcome o;
  std::vector<nv::OracleReport> reports{nv::check_pattern_discrepancy(2, 6), nv::check_pattern_discrepancy(3, 4)};
  absorb(o, reports);
  // Direct recomputation, independent of the oracle's bookkeeping.
  for (auto [b, max_n] : {std::pair{2u, 6u}, {3u, 4u}}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const auto d = discrepancy(champernowne_like(n, b).word(), n);
      o.require(d.delta == 0, "w_" + std::to_string(n) + " over " + std::to_string(b + 1) + " symbols has delta " +
                                  to_fraction(d.delta));
    }
  }
  return o;
}

// 4. Closed-form lengths.
Outcome closed_form_lengths() {
  Outcome o;
  for (auto [b, max_n] : {std::pair{2u, 6u}, {3u, 4u}}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      std::uint64_t p = 1;
      for (unsigned i = 1; i < n; ++i) p *= b + 1;
      const std::uint64_t stars = n * b * p;
      const std::uint64_t total = n * p * (b + 1);
      const PatternWord w = champernowne_like(n, b);
      std::uint64_t counted = 0;
      for (Symbol s : w.word().symbols()) counted += s != b;
      const auto tag = "(b=" + std::to_string(b) + ", n=" + std::to_string(n) + ")";
      o.require(w.expanded_length() == total, tag + " length");
      o.require(counted == stars && w.source_length() == stars, tag + " star count");
      const auto l = lengths(n, b);
      o.require(l.source == stars && l.expanded == total, tag + " closed form");
    }
  }
  return o;
}

// 5. Discrepancy bound for expanded words.
Outcome expansion_bound() {
  Outcome o;
  nv::OracleOptions opt;
  opt.trials = 500;
  std::vector<nv::OracleReport> reports{nv::check_main_lemma(2, 1, opt), nv::check_main_lemma(2, 2, opt)};
  absorb(o, reports, 500);
  o.note(std::to_string(total_instances(reports)) + " instances");
  return o;
}

// 6. Inequalities for length halving, suffixes, concatenation, unaligned counts,
// and the concatenated-occurrence bound.
Outcome block_inequalities() {
  Outcome o;
  nv::OracleOptions opt;
  opt.trials = 1000;
  std::vector<nv::OracleReport> reports;
  for (auto r : nv::run_claim("length-halving", std::nullopt, std::nullopt, opt)) reports.push_back(r);
  reports.push_back(nv::check_suffix_discrepancy(opt));
  reports.push_back(nv::check_concat_discrepancy(opt));
  reports.push_back(nv::check_unaligned_bound(opt));
  nv::OracleOptions many = opt;
  many.trials = 5000;
  reports.push_back(nv::check_concat_occurrence_bound(many));
  absorb(o, reports, 1000);
  for (const auto& r : reports) {
    o.note(r.claim + " " + std::to_string(r.instances) + (r.skipped ? "/" + std::to_string(r.skipped) + " skipped" : ""));
  }
  return o;
}

// 7. Exhaustive subword and mask counts.
Outcome exhaustive_counts() {
  Outcome o;
  std::vector<nv::OracleReport> reports{nv::check_subword_counts(2, 8), nv::check_subword_counts(3, 8),
                                        nv::check_mask_counts(2, 4), nv::check_mask_counts(3, 4)};
  absorb(o, reports);
  o.note(std::to_string(total_instances(reports)) + " instances");
  return o;
}

// 8. End-to-end expansion of the binary Champernowne stream.
Outcome end_to_end() {
  Outcome o;
  constexpr std::uint64_t kSource = 1'000'000;
  std::vector<Symbol> source;
  {
    ChampernowneStream s(2);
    source = take(s, kSource).storage();
  }
  auto expander = expand_stream(std::make_unique<WordStream>(FiniteWord(Alphabet(2), source)),
                                ExpansionSchedule::practical(2));
  std::vector<Symbol> out;
  while (auto s = expander->next()) out.push_back(*s);
  o.require(!expander->failure(), "schedule failure");

  // (a) retraction on the consumed prefix
  const FiniteWord reduced = reduce(FiniteWord(Alphabet(3), out));
  const bool same = reduced.size() == expander->source_expanded() && reduced.size() <= source.size() &&
                    std::equal(reduced.storage().begin(), reduced.storage().end(), source.begin());
  o.require(same, "(a) reduce(output) differs from the consumed prefix");
  o.note("(a) " + std::to_string(reduced.size()) + " source -> " + std::to_string(out.size()) + " output symbols");

  // (b) discrepancy trend
  o.require(out.size() >= 1'000'000, "(b) output shorter than 10^6");
  if (out.size() >= 1'000'000) {
    const FiniteWord word(Alphabet(3), out);
    for (std::size_t len : {1u, 2u}) {
      const auto small = discrepancy(prefix(word, 10'000), len).delta;
      const auto large = discrepancy(prefix(word, 1'000'000), len).delta;
      o.require(large < small, "(b) no decrease at block length " + std::to_string(len));
      o.note("(b) l=" + std::to_string(len) + ": " + to_scientific(small) + " -> " + to_scientific(large));
    }
  }

  // (c) hot spot statistic over the full output
  const Rational hot = hot_spot_statistic(FiniteWord(Alphabet(3), out), 3);
  o.require(hot <= 4, "(c) hot-spot statistic " + to_decimal(hot, 4) + " exceeds 4");
  o.note("(c) hot spot " + to_decimal(hot, 4));
  return o;
}

// 9. Exact theorem-mode arithmetic.
Outcome theorem_arithmetic() {
  Outcome o;
  const Rational c1 = lemma_constant(1, 2);
  const Rational c2 = lemma_constant(2, 2);
  const Rational c4 = lemma_constant(4, 2);
  o.require(c1 == Rational(4, 3), "c_1 != 4/3");
  o.require(c2 == Rational(4096, 9), "c_2 != 4096/9");
  // c_4 = 2^{l_4} / 3^4 with l_4 = 4 * 2 * 3^3 = 216.
  o.require(c4 == Rational(pow_big(2, 216), 81), "c_4 != 2^216/81");
  o.require(c1 > 0 && c2 > c1 && c4 > c2, "constants not positive and increasing");
  const Rational e1 = theorem_epsilon(1, 2);
  o.require(e1 > 0, "eps_1 not positive");
  o.require(e1 < Rational(1, pow_big(10, 60)), "eps_1 >= 10^-60");
  o.note("eps_1 = " + to_scientific(e1));
  return o;
}

// 10. Deterministic verify output.
Outcome determinism() {
  Outcome o;
  auto once = [] {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--claim", "all", "--seed", "42"}, in, out, err);
    return std::pair{code, out.str()};
  };
  const auto a = once();
  const auto b = once();
  o.require(a.first == cli::kSuccess && b.first == cli::kSuccess, "verify did not pass");
  o.require(!a.second.empty() && a.second == b.second, "CSV output differs between runs");
  o.note(std::to_string(a.second.size()) + " bytes");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counting identity", 10, counting_identity},
      {2, "retraction", 5, retraction},
      {3, "pattern discrepancy", 10, pattern_discrepancy},
      {4, "closed-form lengths", 1, closed_form_lengths},
      {5, "expansion discrepancy bound", 30, expansion_bound},
      {6, "discrepancy inequality oracles", 60, block_inequalities},
      {7, "subword and mask counts", 30, exhaustive_counts},
      {8, "end-to-end expansion trend", 120, end_to_end},
      {9, "theorem arithmetic", 1, theorem_arithmetic},
      {10, "verify determinism", 60, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) o.require(false, "took longer than " + std::to_string(c.budget_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ") " << o.detail
              << std::endl;
    failures += !o.ok;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
