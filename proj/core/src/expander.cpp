#include "normexp/expander.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace normexp {

namespace {

// Exact b^exponent, refusing results wider than `cap` bits.
BigInt capped_power(unsigned b, const BigInt& exponent, std::uint64_t cap) {
  const unsigned bits_per_factor = static_cast<unsigned>(std::bit_width(b));
  if (exponent * bits_per_factor > cap) {
    throw ResourceError(std::to_string(b) + "^" + exponent.str() + " exceeds the exact-arithmetic cap of " +
                        std::to_string(cap) + " bits");
  }
  return pow_big(b, static_cast<std::uint64_t>(exponent));
}

std::size_t to_length(const BigInt& value, const char* what) {
  if (value > BigInt(SIZE_MAX / 2)) throw ResourceError(std::string(what) + " too large: " + value.str());
  return static_cast<std::size_t>(value);
}

unsigned doubling_order(unsigned n) {
  if (n >= 31) throw ResourceError("pattern order 2^" + std::to_string(n) + " is out of range");
  return 1u << n;
}

}  // namespace

Rational lemma_constant(unsigned n, unsigned b, std::uint64_t exponent_cap) {
  if (b < 2) throw ArgumentError("source base must be at least 2");
  const PatternLengths len = lengths(n, b);
  return Rational(capped_power(b, len.source, exponent_cap), pow_big(b + 1, n));
}

Rational theorem_epsilon(unsigned n, unsigned b, EpsilonForm form, std::uint64_t exponent_cap) {
  if (n < 1) throw ArgumentError("stage index must be at least 1");
  if (b < 2) throw ArgumentError("source base must be at least 2");
  const unsigned order = doubling_order(n);
  const unsigned next = doubling_order(n + 1);
  const Rational c_order = lemma_constant(order, b, exponent_cap);
  const Rational c_next = lemma_constant(next, b, exponent_cap);
  const BigInt wide = pow_big(b + 1, order);

  Rational first, second;
  if (form == EpsilonForm::derivation) {
    first = Rational(capped_power(b, lengths(order, b).source, exponent_cap)) * c_order;
    second = Rational(wide) * c_next;
  } else {
    first = Rational(pow_big(b, n)) * c_order;
    second = Rational(pow_big(b + 1, n)) * c_next;
  }
  const Rational scale = Rational(1) / (Rational(wide) * n);
  return scale / (Rational(3) * std::max(first, second));
}

// ---------------------------------------------------------------------------

SegmentSelection select_segment(DigitStream& source, const SegmentRequest& request,
                                const SymbolObserver& observer) {
  if (request.unit == 0 || request.measure_length == 0) {
    throw ArgumentError("segment unit and measure length must be at least 1");
  }
  if (request.epsilon <= 0) throw ArgumentError("segment threshold must be positive");

  OccurrenceTable table(source.alphabet(), request.measure_length, request.policy.table);
  SegmentSelection selection;
  std::optional<Rational> best;
  std::uint64_t evaluated_blocks = 0;

  for (;;) {
    auto s = source.next();
    if (!s) {
      selection.dropped = selection.segment.size() % request.unit;
      selection.segment.resize(selection.segment.size() - selection.dropped);
      if (selection.segment.size() >= request.measure_length) {
        OccurrenceTable trimmed(source.alphabet(), request.measure_length, request.policy.table);
        trimmed.push(selection.segment);
        selection.delta = trimmed.delta();
      }
      return selection;
    }
    selection.segment.push_back(*s);
    table.push(*s);
    if (observer) observer(*s);

    const std::size_t k = selection.segment.size();
    if (k % request.unit == 0 && k > request.measure_length && table.blocks_seen() != evaluated_blocks) {
      evaluated_blocks = table.blocks_seen();
      Rational d = table.delta();
      if (d < request.epsilon) {
        selection.accepted = true;
        selection.delta = std::move(d);
        selection.measurement.emplace(std::move(table));
        return selection;
      }
      if (!best || d < *best) best = std::move(d);
    }
    if (k >= request.policy.scan_bound) {
      throw ScheduleError("no segment within " + std::to_string(request.policy.scan_bound) +
                              " symbols reached discrepancy below " + to_fraction(request.epsilon) +
                              " at block length " + std::to_string(request.measure_length) +
                              (best ? "; best was " + to_fraction(*best) : std::string()),
                          best, k);
    }
  }
}

SegmentSelection select_segment(DigitStream& source, unsigned order, unsigned next_order,
                                const Rational& epsilon, const ScanPolicy& policy) {
  const unsigned b = source.alphabet().base();
  SegmentRequest request;
  request.unit = to_length(lengths(order, b).source, "segment unit");
  request.measure_length = to_length(lengths(next_order, b).source, "measure length");
  request.epsilon = epsilon;
  request.policy = policy;
  return select_segment(source, request);
}

// ---------------------------------------------------------------------------

ExpansionSchedule ExpansionSchedule::practical(unsigned b) {
  if (b < 2) throw ArgumentError("source base must be at least 2");
  ExpansionSchedule s;
  s.mode = ScheduleMode::practical;
  s.order = [](unsigned i) { return i; };
  s.epsilon = [b](unsigned i) { return Rational(1) / (Rational(pow_big(b + 1, i)) * i); };
  return s;
}

ExpansionSchedule ExpansionSchedule::theorem(unsigned b, EpsilonForm form) {
  if (b < 2) throw ArgumentError("source base must be at least 2");
  ExpansionSchedule s;
  s.mode = ScheduleMode::theorem;
  s.order = [](unsigned i) { return doubling_order(i); };
  s.epsilon = [b, form](unsigned i) { return theorem_epsilon(i, b, form); };
  return s;
}

StageRecord plan_stage(const ExpansionSchedule& schedule, unsigned b, unsigned index) {
  StageRecord r;
  r.index = index;
  r.order = schedule.order(index);
  r.next_order = schedule.order(index + 1);
  r.epsilon = schedule.epsilon(index);
  r.c_order = lemma_constant(r.order, b);
  return r;
}

Expander::Expander(StreamPtr source, ExpansionSchedule schedule,
                   std::shared_ptr<const PatternProvider> patterns)
    : DigitStream(source->alphabet().expanded()),
      source_(std::move(source)),
      schedule_(std::move(schedule)),
      patterns_(std::move(patterns)),
      b_(source_->alphabet().base()) {
  if (!schedule_.order || !schedule_.epsilon) throw ArgumentError("schedule needs order and threshold functions");
  if (!patterns_) patterns_ = std::make_shared<ChampernownePatterns>(b_);
  if (patterns_->source_base() != b_) throw ArgumentError("pattern provider base does not match the source");
}

std::vector<StageRecord> Expander::stages() const {
  std::lock_guard lock(telemetry_mutex_);
  return stages_;
}

std::optional<ScheduleFailure> Expander::failure() const {
  std::lock_guard lock(telemetry_mutex_);
  return failure_;
}

std::uint64_t Expander::source_expanded() const {
  std::lock_guard lock(telemetry_mutex_);
  return stages_.empty() ? 0 : stages_.back().source_end;
}

std::optional<Symbol> Expander::pull() {
  while (cursor_ == buffer_.size()) {
    if (done_) return std::nullopt;
    run_stage();
  }
  return buffer_[cursor_++];
}

void Expander::run_stage() {
  buffer_.clear();
  cursor_ = 0;
  const unsigned index = static_cast<unsigned>(stages_.size()) + 1;
  if (schedule_.max_stages && index > *schedule_.max_stages) {
    done_ = true;
    return;
  }

  try {
    StageRecord rec = plan_stage(schedule_, b_, index);
    if (rec.next_order <= rec.order) throw ScheduleError("schedule orders must strictly increase", {}, 0);
    if (rec.epsilon <= 0) throw ScheduleError("schedule thresholds must be positive", {}, 0);
    if (!stages_.empty()) {
      const StageRecord& prev = stages_.back();
      if (rec.order <= prev.order) throw ScheduleError("schedule orders must strictly increase", {}, 0);
      if (rec.epsilon > prev.epsilon) throw ScheduleError("schedule thresholds must not increase", {}, 0);
    }

    ExpansionContext ctx(patterns_->pattern(rec.order));
    SegmentRequest request;
    request.unit = ctx.source_length();
    request.measure_length = to_length(lengths(rec.next_order, b_).source, "measure length");
    request.epsilon = rec.epsilon;
    request.policy = schedule_.scan;

    // Continue the previous stage's measurement over this stage's units to
    // record the worst discrepancy of (previous segment + first j units).
    std::optional<Rational> joint;
    std::uint64_t in_stage = 0;
    SymbolObserver observer;
    if (carry_) {
      joint = carry_->delta();
      observer = [&](Symbol s) {
        carry_->push(s);
        if (++in_stage % request.unit == 0) joint = std::max(*joint, carry_->delta());
      };
    }

    const std::uint64_t before = source_->position();
    SegmentSelection sel = select_segment(*source_, request, observer);
    if (sel.segment.empty() && !sel.accepted) {
      std::lock_guard lock(telemetry_mutex_);
      if (!stages_.empty() && joint) stages_.back().joint_delta = joint;
      done_ = true;
      return;
    }

    rec.segment_length = sel.segment.size();
    rec.source_start = before + 1;
    rec.source_end = before + sel.segment.size();
    rec.source_dropped = sel.dropped;
    rec.realized_delta = sel.delta;
    rec.status = sel.accepted ? StageStatus::accepted : StageStatus::partial;

    ctx.expand_into(sel.segment, buffer_);
    rec.output_start = position() + 1;
    rec.output_end = position() + buffer_.size();
    if (buffer_.size() >= rec.order) {
      OccurrenceTable expanded(alphabet(), rec.order, schedule_.scan.table);
      expanded.push(buffer_);
      rec.expanded_delta = expanded.delta();
    }

    carry_ = std::move(sel.measurement);
    if (!sel.accepted) done_ = true;

    std::lock_guard lock(telemetry_mutex_);
    if (!stages_.empty() && joint) stages_.back().joint_delta = joint;
    stages_.push_back(std::move(rec));
  } catch (const ScheduleError& e) {
    buffer_.clear();
    done_ = true;
    std::lock_guard lock(telemetry_mutex_);
    failure_ = ScheduleFailure{index, e.what(), e.best_delta(), e.scanned()};
  } catch (const ResourceError& e) {
    buffer_.clear();
    done_ = true;
    std::lock_guard lock(telemetry_mutex_);
    failure_ = ScheduleFailure{index, e.what(), std::nullopt, 0};
  }
}

std::unique_ptr<Expander> expand_stream(StreamPtr source, ExpansionSchedule schedule) {
  return std::make_unique<Expander>(std::move(source), std::move(schedule));
}

}  // namespace normexp
