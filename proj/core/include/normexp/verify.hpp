#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "normexp/occurrences.hpp"
#include "normexp/rational.hpp"
#include "normexp/transforms.hpp"
#include "normexp/words.hpp"

namespace normexp::verify {

struct OracleOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  Rational slack{1, 1000000};                           // added to measured discrepancies
  std::uint64_t enumeration_budget = std::uint64_t{1} << 22;
};

struct OracleReport {
  std::string claim;
  std::string parameters;
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;                // instances outside the claim's hypotheses
  std::vector<std::string> violations;      // each replayable from its text
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return violations.empty(); }
};

/// Outcome of checking one instance of a conditional claim.
struct Instance {
  bool admissible = true;
  bool holds = true;
  std::string detail;
};

// Single-instance checks. Each measures the hypothesis discrepancy, adds the
// slack to obtain a strict epsilon, and compares the conclusion exactly.

/// Expansion of order n: Δ_{b+1,n}(e_n(v)) < c_n (Δ_{b,l_n}(v) + slack).
Instance main_lemma_instance(const ExpansionContext& ctx, const FiniteWord& v, const Rational& slack);
/// v made of (m n)-blocks: Δ_n(v) < k^{(m-1)n} (Δ_{mn}(v) + slack).
Instance length_halving_instance(const FiniteWord& v, unsigned m, unsigned n, const Rational& slack);
/// Δ_n(v) < ((|uv|+|u|)/|v|) eps, eps = max(Δ_n(u), Δ_n(uv)) + slack.
Instance suffix_instance(const FiniteWord& u, const FiniteWord& v, unsigned n, const Rational& slack);
/// eps = Δ_n(u) + slack; admissible iff Δ_n(v) < ((|uv|+|u|)/|v|) eps; then Δ_n(uv) < 3 eps.
Instance concat_instance(const FiniteWord& u, const FiniteWord& v, unsigned n, const Rational& slack);
/// Admissible iff Δ_n(u) < eps; then
/// occ(u,v) < |u| ((m-1)/n + |C|^{-m} + |C|^n eps) - (m-1) with m = |v| < n.
Instance unaligned_instance(const FiniteWord& u, unsigned n, const FiniteWord& v, const Rational& epsilon);
/// occ(uv,w) <= occ(u,w) + occ(v,w) + |w| - 1.
Instance concat_occurrence_instance(const FiniteWord& u, const FiniteWord& v, const FiniteWord& w);

// Oracles. Exhaustive ones honour options.enumeration_budget (ResourceError
// when exceeded); randomized ones are deterministic in (trials, seed).

OracleReport check_counting_identity(unsigned b, unsigned n, const OracleOptions& options = {});
OracleReport check_main_lemma(unsigned b, unsigned n, const OracleOptions& options = {});
OracleReport check_length_halving(unsigned k, unsigned m, unsigned n, const OracleOptions& options = {});
OracleReport check_suffix_discrepancy(const OracleOptions& options = {});
OracleReport check_concat_discrepancy(const OracleOptions& options = {});
OracleReport check_unaligned_bound(const OracleOptions& options = {});
OracleReport check_concat_occurrence_bound(const OracleOptions& options = {});
/// Every window of every word of length <= max_len over k symbols.
OracleReport check_subword_counts(unsigned k, unsigned max_len, const OracleOptions& options = {});
/// Aligned counts of every mask word in the order-n pattern mask, n <= max_order.
OracleReport check_mask_counts(unsigned b, unsigned max_order, const OracleOptions& options = {});
/// u = v iff masks and reductions agree, all words of length <= max_len.
OracleReport check_equality_splitting(unsigned b, unsigned max_len, const OracleOptions& options = {});
/// alocc(w, v) = alocc(e_n(w), e_n(v)) on random block sequences.
OracleReport check_block_transport(unsigned b, unsigned n, const OracleOptions& options = {});
/// reduce(expand_word(v)) = v on random words.
OracleReport check_retraction(unsigned b, unsigned n, const OracleOptions& options = {});
/// Pattern words of orders 1..max_order have zero discrepancy at their order.
OracleReport check_pattern_discrepancy(unsigned b, unsigned max_order, const OracleOptions& options = {});

/// Claim names accepted by run_claim, in suite order.
const std::vector<std::string>& claim_names();

/// Runs one named claim ("all" runs the full default suite). base/order
/// override the claim's default parameters where the claim has them.
std::vector<OracleReport> run_claim(const std::string& claim, std::optional<unsigned> base,
                                    std::optional<unsigned> order, const OracleOptions& options = {});

/// Machine-readable form: versioned comment line, header, one row per report.
/// Timing is left out so equal inputs give byte-identical output.
void write_csv(std::ostream& out, std::span<const OracleReport> reports);

/// Human-readable summary including timings and violation witnesses.
void write_text(std::ostream& out, std::span<const OracleReport> reports);

}  // namespace normexp::verify
