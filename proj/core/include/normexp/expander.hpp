#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normexp/occurrences.hpp"
#include "normexp/pattern.hpp"
#include "normexp/rational.hpp"
#include "normexp/stream.hpp"
#include "normexp/transforms.hpp"

namespace normexp {

/// Largest exponent, in bits, accepted when materialising b^l exactly.
inline constexpr std::uint64_t kDefaultExponentCap = std::uint64_t{1} << 26;

/// b^{l_n} / (b+1)^n: the factor by which expansion of order n can amplify
/// the discrepancy of the source blocks.
Rational lemma_constant(unsigned n, unsigned b, std::uint64_t exponent_cap = kDefaultExponentCap);

/// Which reading of the staged threshold to evaluate. `derivation` uses the
/// factors b^{l_{2^n}} c_{2^n} and (b+1)^{2^n} c_{2^{n+1}}, the ones the
/// inequality chain needs; `printed` uses b^n c_{2^n} and (b+1)^n c_{2^{n+1}}.
enum class EpsilonForm { derivation, printed };

/// Stage-n threshold of the doubling-order construction:
/// 1/((b+1)^{2^n} n) * 1/(3 max(first factor, second factor)).
Rational theorem_epsilon(unsigned n, unsigned b, EpsilonForm form = EpsilonForm::derivation,
                         std::uint64_t exponent_cap = kDefaultExponentCap);

/// Segment selection could not meet its threshold within the scan bound.
class ScheduleError : public std::runtime_error {
 public:
  ScheduleError(std::string what, std::optional<Rational> best_delta, std::uint64_t scanned)
      : std::runtime_error(std::move(what)), best_delta_(std::move(best_delta)), scanned_(scanned) {}

  const std::optional<Rational>& best_delta() const noexcept { return best_delta_; }
  std::uint64_t scanned() const noexcept { return scanned_; }

 private:
  std::optional<Rational> best_delta_;
  std::uint64_t scanned_;
};

struct ScanPolicy {
  std::uint64_t scan_bound = 100'000'000;  // source symbols per stage
  TableOptions table{std::uint64_t{1} << 24, true};
};

struct SegmentRequest {
  std::size_t unit = 1;            // segment length must be a multiple of this
  std::size_t measure_length = 1;  // block length the discrepancy is measured at
  Rational epsilon;
  ScanPolicy policy;
};

struct SegmentSelection {
  std::vector<Symbol> segment;
  bool accepted = false;           // false: the source ended first
  std::optional<Rational> delta;   // at measure_length over `segment`
  std::uint64_t dropped = 0;       // consumed trailing symbols short of a unit
  std::optional<OccurrenceTable> measurement;  // counts over `segment` when accepted
};

/// Invoked with every symbol select_segment pulls from the source.
using SymbolObserver = std::function<void(Symbol)>;

/// Pulls symbols until the first length k, a multiple of `unit` with
/// k > measure_length, whose discrepancy at measure_length is below epsilon.
/// Throws ScheduleError once policy.scan_bound symbols pass without success.
/// When the source ends first, returns the longest whole-unit prefix with
/// accepted = false.
SegmentSelection select_segment(DigitStream& source, const SegmentRequest& request,
                                const SymbolObserver& observer = {});

/// Order-based form: unit = l_order, measure_length = l_next_order.
SegmentSelection select_segment(DigitStream& source, unsigned order, unsigned next_order,
                                const Rational& epsilon, const ScanPolicy& policy = {});

enum class ScheduleMode { theorem, practical };

struct ExpansionSchedule {
  ScheduleMode mode = ScheduleMode::practical;
  std::function<unsigned(unsigned)> order;    // stage index (from 1) -> pattern order
  std::function<Rational(unsigned)> epsilon;  // stage index -> threshold
  ScanPolicy scan;
  std::optional<unsigned> max_stages;

  /// Orders 1, 2, 3, ...; threshold (b+1)^{-i} / i at stage i.
  static ExpansionSchedule practical(unsigned b);
  /// Orders 2^i with the exact staged thresholds.
  static ExpansionSchedule theorem(unsigned b, EpsilonForm form = EpsilonForm::derivation);
};

enum class StageStatus { accepted, partial };

struct StageRecord {
  unsigned index = 0;
  unsigned order = 0;
  unsigned next_order = 0;
  Rational epsilon;
  Rational c_order;
  std::uint64_t segment_length = 0;
  std::uint64_t source_start = 0;  // 1-based, inclusive
  std::uint64_t source_end = 0;    // 1-based, inclusive; source_start - 1 when empty
  std::uint64_t source_dropped = 0;
  std::uint64_t output_start = 0;
  std::uint64_t output_end = 0;
  std::optional<Rational> realized_delta;  // source, block length l_{next order}
  std::optional<Rational> expanded_delta;  // expanded segment, block length = order
  std::optional<Rational> joint_delta;     // max over whole next-stage units j of the
                                           // realized measure on segment + next j units
  StageStatus status = StageStatus::accepted;
};

struct ScheduleFailure {
  unsigned stage = 0;
  std::string message;
  std::optional<Rational> best_delta;
  std::uint64_t scanned = 0;
};

/// Stage values known before any input is read: order, thresholds, constants.
StageRecord plan_stage(const ExpansionSchedule& schedule, unsigned b, unsigned index);

/// The staged expansion as a lazy stream over b+1 symbols. Each stage selects
/// a source segment, expands it with that stage's pattern and emits it.
/// A schedule failure ends the output at the preceding stage boundary; it is
/// then reported by failure(). Telemetry accessors may be called from other
/// threads while the stream is consumed.
class Expander final : public DigitStream {
 public:
  Expander(StreamPtr source, ExpansionSchedule schedule,
           std::shared_ptr<const PatternProvider> patterns = nullptr);

  std::vector<StageRecord> stages() const;
  std::optional<ScheduleFailure> failure() const;
  /// Source symbols covered by emitted stages.
  std::uint64_t source_expanded() const;
  std::uint64_t source_position() const { return source_->position(); }

 protected:
  std::optional<Symbol> pull() override;

 private:
  void run_stage();

  StreamPtr source_;
  ExpansionSchedule schedule_;
  std::shared_ptr<const PatternProvider> patterns_;
  unsigned b_;

  std::vector<Symbol> buffer_;
  std::size_t cursor_ = 0;
  bool done_ = false;
  std::uint64_t emitted_ = 0;

  std::optional<OccurrenceTable> carry_;  // previous stage's measurement, continued

  mutable std::mutex telemetry_mutex_;
  std::vector<StageRecord> stages_;
  std::optional<ScheduleFailure> failure_;
};

/// Builds the staged expansion of `source`.
std::unique_ptr<Expander> expand_stream(StreamPtr source, ExpansionSchedule schedule);

}  // namespace normexp
