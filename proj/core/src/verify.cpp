#include "normexp/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "normexp/expander.hpp"
#include "normexp/pattern.hpp"

namespace normexp::verify {

namespace {

using Clock = std::chrono::steady_clock;

constexpr TableOptions kOracleTables{std::uint64_t{1} << 24, true};

std::uint64_t salt(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed ^ salt(stream)) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  FiniteWord word(Alphabet alphabet, std::size_t length) {
    std::vector<Symbol> s(length);
    for (auto& x : s) x = static_cast<Symbol>(below(alphabet.base()));
    return FiniteWord(alphabet, std::move(s));
  }

 private:
  std::mt19937_64 rng_;
};

std::string show(const FiniteWord& w) {
  if (w.alphabet().base() <= 10) return "\"" + w.to_digits() + "\"";
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + std::to_string(w.storage()[i]);
  return out + "]";
}

Rational delta_of(const FiniteWord& w, std::size_t block_length) {
  return discrepancy(w, block_length, kOracleTables).delta;
}

std::size_t as_size(const BigInt& v) { return static_cast<std::size_t>(v); }

OracleReport start(std::string claim, std::string parameters) {
  OracleReport r;
  r.claim = std::move(claim);
  r.parameters = std::move(parameters);
  return r;
}

void record(OracleReport& report, const Instance& instance) {
  if (!instance.admissible) {
    ++report.skipped;
    return;
  }
  ++report.instances;
  if (!instance.holds) report.violations.push_back(instance.detail);
}

void require_budget(std::uint64_t needed, const OracleOptions& options, const std::string& what) {
  if (needed == 0 || needed > options.enumeration_budget) {
    throw ResourceError(what + " exceeds the enumeration budget of " + std::to_string(options.enumeration_budget));
  }
}

// Advances a fixed-length word to its lexicographic successor; false on wrap.
bool next_word(std::vector<Symbol>& w, unsigned base) {
  for (std::size_t k = w.size(); k > 0; --k) {
    if (w[k - 1] + 1u < base) {
      ++w[k - 1];
      return true;
    }
    w[k - 1] = 0;
  }
  return false;
}

ExpansionContext context_for(unsigned b, unsigned n) {
  return ExpansionContext(std::make_shared<const PatternWord>(champernowne_like(n, b)));
}

std::string params(std::initializer_list<std::pair<const char*, unsigned>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += (out.empty() ? "" : ";") + std::string(k) + "=" + std::to_string(v);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Single instances

Instance main_lemma_instance(const ExpansionContext& ctx, const FiniteWord& v, const Rational& slack) {
  const Rational eps = delta_of(v, ctx.source_length()) + slack;
  const FiniteWord e = expand_word(ctx, v);
  const Rational lhs = delta_of(e, ctx.order());
  const Rational bound = lemma_constant(ctx.order(), ctx.source_alphabet().base()) * eps;
  Instance out;
  out.holds = lhs < bound;
  if (!out.holds) {
    out.detail = "v=" + show(v) + " n=" + std::to_string(ctx.order()) + " expanded delta " + to_fraction(lhs) +
                 " >= " + to_fraction(bound);
  }
  return out;
}

Instance length_halving_instance(const FiniteWord& v, unsigned m, unsigned n, const Rational& slack) {
  const std::size_t long_block = static_cast<std::size_t>(m) * n;
  if (m < 1 || n < 1 || v.empty() || v.size() % long_block != 0) {
    throw ArgumentError("length-halving instance needs a nonempty word made of (m n)-blocks");
  }
  const Rational eps = delta_of(v, long_block) + slack;
  const Rational lhs = delta_of(v, n);
  const Rational bound = Rational(pow_big(v.alphabet().base(), static_cast<std::uint64_t>(m - 1) * n)) * eps;
  Instance out;
  out.holds = lhs < bound;
  if (!out.holds) {
    out.detail = "v=" + show(v) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " delta " +
                 to_fraction(lhs) + " >= " + to_fraction(bound);
  }
  return out;
}

Instance suffix_instance(const FiniteWord& u, const FiniteWord& v, unsigned n, const Rational& slack) {
  if (n < 1 || u.empty() || v.size() < n || u.size() % n != 0 || v.size() % n != 0) {
    throw ArgumentError("suffix instance needs nonempty u, v made of n-blocks");
  }
  const FiniteWord uv = concat(u, v);
  const Rational eps = std::max(delta_of(u, n), delta_of(uv, n)) + slack;
  const Rational bound = Rational(uv.size() + u.size(), v.size()) * eps;
  const Rational lhs = delta_of(v, n);
  Instance out;
  out.holds = lhs < bound;
  if (!out.holds) {
    out.detail = "u=" + show(u) + " v=" + show(v) + " n=" + std::to_string(n) + " delta(v) " + to_fraction(lhs) +
                 " >= " + to_fraction(bound);
  }
  return out;
}

Instance concat_instance(const FiniteWord& u, const FiniteWord& v, unsigned n, const Rational& slack) {
  if (n < 1 || u.empty() || v.size() < n || u.size() % n != 0 || v.size() % n != 0) {
    throw ArgumentError("concatenation instance needs nonempty u, v made of n-blocks");
  }
  const FiniteWord uv = concat(u, v);
  const Rational eps = delta_of(u, n) + slack;
  Instance out;
  out.admissible = delta_of(v, n) < Rational(uv.size() + u.size(), v.size()) * eps;
  if (!out.admissible) return out;
  const Rational lhs = delta_of(uv, n);
  out.holds = lhs < 3 * eps;
  if (!out.holds) {
    out.detail = "u=" + show(u) + " v=" + show(v) + " n=" + std::to_string(n) + " delta(uv) " + to_fraction(lhs) +
                 " >= 3*" + to_fraction(eps);
  }
  return out;
}

Instance unaligned_instance(const FiniteWord& u, unsigned n, const FiniteWord& v, const Rational& epsilon) {
  const std::size_t m = v.size();
  if (m < 1 || m >= n || u.empty() || u.size() % n != 0) {
    throw ArgumentError("unaligned instance needs 1 <= |v| < n and nonempty u made of n-blocks");
  }
  Instance out;
  out.admissible = delta_of(u, n) < epsilon;
  if (!out.admissible) return out;
  const unsigned k = u.alphabet().base();
  const Rational per_symbol = Rational(m - 1, n) + Rational(BigInt(1), pow_big(k, m)) +
                              Rational(pow_big(k, n)) * epsilon;
  const Rational bound = Rational(u.size()) * per_symbol - Rational(m - 1);
  const std::uint64_t occ = occurrences(u, v);
  out.holds = Rational(occ) < bound;
  if (!out.holds) {
    out.detail = "u=" + show(u) + " v=" + show(v) + " n=" + std::to_string(n) + " occ " + std::to_string(occ) +
                 " >= " + to_fraction(bound);
  }
  return out;
}

Instance concat_occurrence_instance(const FiniteWord& u, const FiniteWord& v, const FiniteWord& w) {
  const std::uint64_t lhs = occurrences(concat(u, v), w);
  const std::uint64_t rhs = occurrences(u, w) + occurrences(v, w) + (w.size() - 1);
  Instance out;
  out.holds = lhs <= rhs;
  if (!out.holds) {
    out.detail = "u=" + show(u) + " v=" + show(v) + " w=" + show(w) + " occ(uv,w) " + std::to_string(lhs) +
                 " > " + std::to_string(rhs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

OracleReport check_counting_identity(unsigned b, unsigned n, const OracleOptions& options) {
  auto report = start("counting-identity", params({{"b", b}, {"n", n}}));
  const auto t0 = Clock::now();
  const std::size_t source_len = as_size(lengths(n, b).source);
  const std::uint64_t sources = checked_power(b, source_len);
  require_budget(sources, options, std::to_string(b) + "^" + std::to_string(source_len) + " expansions");

  const ExpansionContext ctx = context_for(b, n);
  const Alphabet wide(b + 1);
  const std::uint64_t targets = checked_power(wide.base(), n);
  std::vector<std::uint64_t> sums(targets, 0);

  std::vector<Symbol> u(source_len, 0);
  std::vector<Symbol> e;
  do {
    e.clear();
    ctx.expand_into(u, e);
    for (std::size_t start = 0; start + n <= e.size(); start += n) {
      ++sums[lex_rank(wide, std::span<const Symbol>(e).subspan(start, n))];
    }
    ++report.instances;
  } while (next_word(u, b));

  for (std::uint64_t rank = 0; rank < targets; ++rank) {
    if (sums[rank] != sources) {
      report.violations.push_back("target " + show(lex_unrank(wide, n, rank)) + " summed to " +
                                  std::to_string(sums[rank]) + ", expected " + std::to_string(sources));
    }
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_main_lemma(unsigned b, unsigned n, const OracleOptions& options) {
  auto report = start("main-lemma", params({{"b", b}, {"n", n}, {"trials", static_cast<unsigned>(options.trials)}}));
  const auto t0 = Clock::now();
  const ExpansionContext ctx = context_for(b, n);
  Sampler rng(options.seed, report.claim + report.parameters);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const std::size_t blocks = rng.between(1, 64);
    record(report, main_lemma_instance(ctx, rng.word(Alphabet(b), blocks * ctx.source_length()), options.slack));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_length_halving(unsigned k, unsigned m, unsigned n, const OracleOptions& options) {
  auto report = start("length-halving", params({{"k", k}, {"m", m}, {"n", n}}));
  const auto t0 = Clock::now();
  Sampler rng(options.seed, report.claim + report.parameters);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const std::size_t blocks = rng.between(1, 32);
    record(report, length_halving_instance(rng.word(Alphabet(k), blocks * m * n), m, n, options.slack));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_suffix_discrepancy(const OracleOptions& options) {
  auto report = start("suffix-discrepancy", "k=2..3;n=1..3");
  const auto t0 = Clock::now();
  Sampler rng(options.seed, report.claim);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Alphabet a(static_cast<unsigned>(rng.between(2, 3)));
    const unsigned n = static_cast<unsigned>(rng.between(1, 3));
    const FiniteWord u = rng.word(a, rng.between(1, 16) * n);
    const FiniteWord v = rng.word(a, rng.between(1, 16) * n);
    record(report, suffix_instance(u, v, n, options.slack));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_concat_discrepancy(const OracleOptions& options) {
  auto report = start("concat-discrepancy", "k=2..3;n=1..3");
  const auto t0 = Clock::now();
  Sampler rng(options.seed, report.claim);
  const std::uint64_t max_attempts = 100 * options.trials;
  for (std::uint64_t attempt = 0; attempt < max_attempts && report.instances < options.trials; ++attempt) {
    const Alphabet a(static_cast<unsigned>(rng.between(2, 3)));
    const unsigned n = static_cast<unsigned>(rng.between(1, 3));
    const FiniteWord u = rng.word(a, rng.between(1, 16) * n);
    const FiniteWord v = rng.word(a, rng.between(1, 16) * n);
    record(report, concat_instance(u, v, n, options.slack));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_unaligned_bound(const OracleOptions& options) {
  auto report = start("unaligned-bound", "k=2..3;n=2..4");
  const auto t0 = Clock::now();
  Sampler rng(options.seed, report.claim);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Alphabet a(static_cast<unsigned>(rng.between(2, 3)));
    const unsigned n = static_cast<unsigned>(rng.between(2, 4));
    const FiniteWord u = rng.word(a, rng.between(1, 16) * n);
    const Rational eps = delta_of(u, n) + options.slack;
    bool holds = true;
    for (std::size_t m = 1; m < n && holds; ++m) {
      std::vector<Symbol> v(m, 0);
      do {
        Instance inst = unaligned_instance(u, n, FiniteWord(a, v), eps);
        if (!inst.holds) {
          report.violations.push_back(inst.detail);
          holds = false;
          break;
        }
      } while (next_word(v, a.base()));
    }
    ++report.instances;
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_concat_occurrence_bound(const OracleOptions& options) {
  auto report = start("concat-occurrence-bound", "k=2..3;len<=12");
  const auto t0 = Clock::now();
  Sampler rng(options.seed, report.claim);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Alphabet a(static_cast<unsigned>(rng.between(2, 3)));
    const FiniteWord u = rng.word(a, rng.between(0, 12));
    const FiniteWord v = rng.word(a, rng.between(0, 12));
    const FiniteWord w = rng.word(a, rng.between(1, 6));
    record(report, concat_occurrence_instance(u, v, w));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_subword_counts(unsigned k, unsigned max_len, const OracleOptions& options) {
  auto report = start("subword-counts", params({{"k", k}, {"max_len", max_len}}));
  const auto t0 = Clock::now();
  const Alphabet a(k);
  for (unsigned m = 2; m <= max_len; ++m) {
    const std::uint64_t words = checked_power(k, m);
    require_budget(words, options, std::to_string(k) + "^" + std::to_string(m) + " words");
    // counts[n-1][i] holds, per window content v of length n at offset i,
    // how many u in C^m carry v there.
    std::vector<std::vector<std::vector<std::uint64_t>>> counts(m - 1);
    for (unsigned n = 1; n < m; ++n) {
      counts[n - 1].assign(m - n + 1, std::vector<std::uint64_t>(checked_power(k, n), 0));
    }
    std::vector<Symbol> u(m, 0);
    do {
      for (unsigned n = 1; n < m; ++n) {
        for (unsigned i = 0; i + n <= m; ++i) {
          ++counts[n - 1][i][lex_rank(a, std::span<const Symbol>(u).subspan(i, n))];
        }
      }
    } while (next_word(u, k));
    for (unsigned n = 1; n < m; ++n) {
      const std::uint64_t expected = checked_power(k, m - n);
      for (unsigned i = 0; i + n <= m; ++i) {
        const auto& row = counts[n - 1][i];
        for (std::uint64_t rank = 0; rank < row.size(); ++rank) {
          ++report.instances;
          if (row[rank] != expected) {
            report.violations.push_back("m=" + std::to_string(m) + " i=" + std::to_string(i) + " v=" +
                                        show(lex_unrank(a, n, rank)) + " counted " + std::to_string(row[rank]) +
                                        ", expected " + std::to_string(expected));
          }
        }
      }
    }
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_mask_counts(unsigned b, unsigned max_order, const OracleOptions& options) {
  auto report = start("mask-counts", params({{"b", b}, {"max_order", max_order}}));
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= max_order; ++n) {
    const PatternWord pattern = champernowne_like(n, b, options.enumeration_budget);
    const Mask& mask = pattern.mask();
    // Mask words of length n ranked as binary numbers, wildcard = 1.
    std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
    for (std::size_t start = 0; start + n <= mask.size(); start += n) {
      std::size_t rank = 0;
      for (std::size_t i = 0; i < n; ++i) rank = rank * 2 + (mask[start + i] == Slot::wildcard ? 1 : 0);
      ++counts[rank];
    }
    for (std::size_t rank = 0; rank < counts.size(); ++rank) {
      const auto stars = static_cast<std::size_t>(std::popcount(rank));
      const std::uint64_t expected = checked_power(b, stars);
      ++report.instances;
      if (counts[rank] != expected) {
        std::string word;
        for (std::size_t i = n; i-- > 0;) word += ((rank >> i) & 1) ? '*' : 'b';
        report.violations.push_back("n=" + std::to_string(n) + " mask word " + word + " counted " +
                                    std::to_string(counts[rank]) + ", expected " + std::to_string(expected));
      }
    }
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_equality_splitting(unsigned b, unsigned max_len, const OracleOptions& options) {
  auto report = start("equality-splitting", params({{"b", b}, {"max_len", max_len}}));
  const auto t0 = Clock::now();
  const Alphabet wide(b + 1);
  std::vector<FiniteWord> words;
  for (unsigned len = 0; len <= max_len; ++len) {
    const std::uint64_t count = checked_power(wide.base(), len);
    require_budget(count * count, options, "word pairs");
    for (std::uint64_t rank = 0; rank < count; ++rank) words.push_back(lex_unrank(wide, len, rank));
  }
  std::vector<Mask> masks;
  std::vector<FiniteWord> reduced;
  for (const auto& w : words) {
    masks.push_back(wildcard(w));
    reduced.push_back(reduce(w));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      ++report.instances;
      const bool equal = words[i] == words[j];
      const bool split = masks[i] == masks[j] && reduced[i] == reduced[j];
      if (equal != split) {
        report.violations.push_back("u=" + show(words[i]) + " v=" + show(words[j]) + " equal=" +
                                    std::to_string(equal) + " masks+reductions equal=" + std::to_string(split));
      }
    }
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_block_transport(unsigned b, unsigned n, const OracleOptions& options) {
  auto report = start("block-transport", params({{"b", b}, {"n", n}}));
  const auto t0 = Clock::now();
  const ExpansionContext ctx = context_for(b, n);
  const Alphabet a(b);
  const std::size_t len = ctx.source_length();
  Sampler rng(options.seed, report.claim + report.parameters);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const std::size_t blocks = rng.between(1, 32);
    // Blocks drawn from a few fixed choices make nonzero counts common.
    std::vector<Symbol> pool;
    const std::size_t distinct = rng.between(1, 4);
    std::vector<FiniteWord> choices;
    for (std::size_t d = 0; d < distinct; ++d) choices.push_back(rng.word(a, len));
    for (std::size_t k = 0; k < blocks; ++k) {
      const auto& pick = choices[rng.below(distinct)].storage();
      pool.insert(pool.end(), pick.begin(), pick.end());
    }
    const FiniteWord w(a, std::move(pool));
    const FiniteWord v = rng.below(4) == 0 ? rng.word(a, len) : choices[rng.below(distinct)];
    const std::uint64_t before = aligned_occurrences(w, v);
    const std::uint64_t after = aligned_occurrences(expand_word(ctx, w), expand_block(ctx, v));
    ++report.instances;
    if (before != after) {
      report.violations.push_back("w=" + show(w) + " v=" + show(v) + " alocc " + std::to_string(before) +
                                  " became " + std::to_string(after));
    }
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_retraction(unsigned b, unsigned n, const OracleOptions& options) {
  auto report = start("retraction", params({{"b", b}, {"n", n}}));
  const auto t0 = Clock::now();
  const ExpansionContext ctx = context_for(b, n);
  Sampler rng(options.seed, report.claim + report.parameters);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const FiniteWord v = rng.word(Alphabet(b), rng.between(0, 16) * ctx.source_length());
    ++report.instances;
    if (reduce(expand_word(ctx, v)) != v) report.violations.push_back("v=" + show(v));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

OracleReport check_pattern_discrepancy(unsigned b, unsigned max_order, const OracleOptions& options) {
  auto report = start("pattern-discrepancy", params({{"b", b}, {"max_order", max_order}}));
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= max_order; ++n) {
    const PatternWord pattern = champernowne_like(n, b, options.enumeration_budget);
    const Rational d = delta_of(pattern.word(), n);
    ++report.instances;
    if (d != 0) report.violations.push_back("order " + std::to_string(n) + " delta " + to_fraction(d));
  }
  report.elapsed = Clock::now() - t0;
  return report;
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {
      "counting-identity",  "main-lemma",       "length-halving",          "suffix-discrepancy",
      "concat-discrepancy", "unaligned-bound",  "concat-occurrence-bound", "subword-counts",
      "mask-counts",        "equality-splitting", "block-transport",       "retraction",
      "pattern-discrepancy"};
  return names;
}

std::vector<OracleReport> run_claim(const std::string& claim, std::optional<unsigned> base,
                                    std::optional<unsigned> order, const OracleOptions& options) {
  using Pairs = std::vector<std::pair<unsigned, unsigned>>;
  auto pairs = [&](Pairs defaults) {
    if (base || order) {
      return Pairs{{base.value_or(defaults.front().first), order.value_or(defaults.front().second)}};
    }
    return defaults;
  };
  std::vector<OracleReport> out;

  if (claim == "all") {
    for (const auto& name : claim_names()) {
      auto part = run_claim(name, std::nullopt, std::nullopt, options);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else if (claim == "counting-identity") {
    for (auto [b, n] : pairs({{2, 1}, {2, 2}, {3, 1}})) out.push_back(check_counting_identity(b, n, options));
  } else if (claim == "main-lemma") {
    for (auto [b, n] : pairs({{2, 1}, {2, 2}})) out.push_back(check_main_lemma(b, n, options));
  } else if (claim == "length-halving") {
    using Triples = std::vector<std::array<unsigned, 3>>;
    Triples triples = {{2, 2, 1}, {3, 2, 1}, {2, 3, 2}, {2, 2, 3}};
    if (base || order) triples = {{base.value_or(2), 2, order.value_or(1)}};
    for (auto [k, m, n] : triples) out.push_back(check_length_halving(k, m, n, options));
  } else if (claim == "suffix-discrepancy") {
    out.push_back(check_suffix_discrepancy(options));
  } else if (claim == "concat-discrepancy") {
    out.push_back(check_concat_discrepancy(options));
  } else if (claim == "unaligned-bound") {
    out.push_back(check_unaligned_bound(options));
  } else if (claim == "concat-occurrence-bound") {
    out.push_back(check_concat_occurrence_bound(options));
  } else if (claim == "subword-counts") {
    for (auto [k, len] : pairs({{2, 8}, {3, 8}})) out.push_back(check_subword_counts(k, len, options));
  } else if (claim == "mask-counts") {
    for (auto [b, n] : pairs({{2, 4}, {3, 4}})) out.push_back(check_mask_counts(b, n, options));
  } else if (claim == "equality-splitting") {
    for (auto [b, len] : pairs({{2, 4}})) out.push_back(check_equality_splitting(b, len, options));
  } else if (claim == "block-transport") {
    for (auto [b, n] : pairs({{2, 1}, {2, 2}})) out.push_back(check_block_transport(b, n, options));
  } else if (claim == "retraction") {
    for (auto [b, n] : pairs({{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})) out.push_back(check_retraction(b, n, options));
  } else if (claim == "pattern-discrepancy") {
    for (auto [b, n] : pairs({{2, 6}, {3, 4}})) out.push_back(check_pattern_discrepancy(b, n, options));
  } else {
    throw ArgumentError("unknown claim '" + claim + "'");
  }
  return out;
}

void write_csv(std::ostream& out, std::span<const OracleReport> reports) {
  out << "# normexp-verify v1\n";
  out << "claim,parameters,instances,skipped,violations,status\n";
  for (const auto& r : reports) {
    out << r.claim << ',' << r.parameters << ',' << r.instances << ',' << r.skipped << ','
        << r.violations.size() << ',' << (r.passed() ? "pass" : "fail") << '\n';
  }
}

void write_text(std::ostream& out, std::span<const OracleReport> reports) {
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.claim << " [" << r.parameters << "] " << r.instances
        << " instances";
    if (r.skipped) out << ", " << r.skipped << " skipped";
    out << " (" << std::fixed << std::setprecision(3) << r.elapsed.count() << " s)\n";
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
      if (++shown > 10) {
        out << "    ... " << (r.violations.size() - 10) << " more\n";
        break;
      }
      out << "    violation: " << v << '\n';
    }
  }
}

}  // namespace normexp::verify
