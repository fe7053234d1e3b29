#include "normexp/occurrences.hpp"

#include <algorithm>
#include <string>

namespace normexp {

namespace {

void require_pattern(const FiniteWord& v) {
  if (v.empty()) throw ArgumentError("occurrence count of the empty word is undefined");
}

}  // namespace

std::uint64_t aligned_occurrences(const FiniteWord& u, const FiniteWord& v) {
  require_pattern(v);
  const auto hay = u.symbols();
  const auto needle = v.symbols();
  std::uint64_t count = 0;
  for (std::size_t start = 0; start + needle.size() <= hay.size(); start += needle.size()) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(start))) ++count;
  }
  return count;
}

std::uint64_t occurrences(const FiniteWord& u, const FiniteWord& v) {
  require_pattern(v);
  const auto hay = u.symbols();
  const auto needle = v.symbols();
  std::uint64_t count = 0;
  for (std::size_t start = 0; start + needle.size() <= hay.size(); ++start) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(start))) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// OccurrenceTable

OccurrenceTable::OccurrenceTable(Alphabet alphabet, std::size_t block_length, TableOptions options)
    : alphabet_(alphabet), block_length_(block_length) {
  if (block_length == 0) throw ArgumentError("block length must be at least 1");
  universe_ = pow_big(alphabet.base(), block_length);
  const std::uint64_t exact = checked_power(alphabet.base(), block_length);
  universe_saturated_ = exact == 0 ? UINT64_MAX : exact;
  dense_ = exact != 0 && exact <= options.dense_cap;
  if (dense_) {
    dense_counts_.assign(exact, 0);
  } else if (!options.sparse_fallback) {
    throw ResourceError("block table of " + std::to_string(alphabet.base()) + "^" +
                        std::to_string(block_length) + " entries exceeds the cap of " +
                        std::to_string(options.dense_cap));
  } else {
    pending_.reserve(block_length);
  }
  histogram_.assign(2, 0);
}

void OccurrenceTable::push(Symbol s) {
  if (!alphabet_.contains(s)) {
    throw ArgumentError("symbol " + std::to_string(s) + " outside base " + std::to_string(alphabet_.base()));
  }
  ++consumed_;
  if (dense_) {
    pending_rank_ = pending_rank_ * alphabet_.base() + s;
  } else {
    pending_.push_back(static_cast<char>(s));
  }
  if (++pending_len_ == block_length_) {
    record_block();
    pending_rank_ = 0;
    pending_.clear();
    pending_len_ = 0;
  }
}

void OccurrenceTable::push(std::span<const Symbol> symbols) {
  for (Symbol s : symbols) push(s);
}

void OccurrenceTable::record_block() {
  if (dense_) {
    bump(dense_counts_[pending_rank_]);
  } else {
    bump(sparse_counts_[pending_]);
  }
}

void OccurrenceTable::bump(std::uint64_t& slot) {
  const std::uint64_t c = slot++;
  ++blocks_seen_;
  if (c == 0) {
    ++distinct_;
  } else {
    --histogram_[c];
  }
  if (histogram_.size() <= c + 1) histogram_.resize(c + 2, 0);
  ++histogram_[c + 1];
  max_count_ = std::max(max_count_, c + 1);
  if (c == 0) {
    min_seen_ = 1;
  } else if (c == min_seen_ && histogram_[c] == 0) {
    min_seen_ = c + 1;
  }
}

std::uint64_t OccurrenceTable::min_count() const noexcept {
  return distinct_ < universe_saturated_ ? 0 : min_seen_;
}

std::uint64_t OccurrenceTable::count(std::span<const Symbol> block) const {
  if (block.size() != block_length_) {
    throw ArgumentError("block of length " + std::to_string(block.size()) + " queried in a table of length " +
                        std::to_string(block_length_));
  }
  validate_symbols(alphabet_, block);
  if (dense_) return dense_counts_[lex_rank(alphabet_, block)];
  auto it = sparse_counts_.find(std::string(block.begin(), block.end()));
  return it == sparse_counts_.end() ? 0 : it->second;
}

Rational OccurrenceTable::delta() const {
  if (blocks_seen_ == 0) {
    throw ArgumentError("discrepancy needs at least one complete block of length " +
                        std::to_string(block_length_));
  }
  const BigInt n = blocks_seen_;
  const BigInt above = BigInt(max_count_) * universe_ - n;
  const BigInt below = n - BigInt(min_count()) * universe_;
  return Rational(std::max(above, below), n * universe_);
}

bool OccurrenceTable::delta_below(const Rational& epsilon) const {
  if (blocks_seen_ == 0) return false;
  const BigInt n = blocks_seen_;
  const BigInt above = BigInt(max_count_) * universe_ - n;
  const BigInt below = n - BigInt(min_count()) * universe_;
  return std::max(above, below) * denominator_of(epsilon) < numerator_of(epsilon) * n * universe_;
}

FiniteWord OccurrenceTable::least_block_with_count(std::uint64_t c) const {
  if (dense_) {
    for (std::size_t rank = 0; rank < dense_counts_.size(); ++rank) {
      if (dense_counts_[rank] == c) return lex_unrank(alphabet_, block_length_, rank);
    }
  } else if (c == 0) {
    // Some word among the first distinct_+1 in lexicographic order is unseen.
    std::string word(block_length_, '\0');
    for (;;) {
      auto it = sparse_counts_.find(word);
      if (it == sparse_counts_.end()) break;
      std::size_t k = block_length_;
      while (k > 0) {
        auto& digit = reinterpret_cast<unsigned char&>(word[k - 1]);
        if (digit + 1u < alphabet_.base()) {
          ++digit;
          break;
        }
        digit = 0;
        --k;
      }
    }
    return FiniteWord(alphabet_, std::vector<Symbol>(word.begin(), word.end()));
  } else {
    const std::string* best = nullptr;
    for (const auto& [key, value] : sparse_counts_) {
      if (value == c && (best == nullptr || key < *best)) best = &key;
    }
    if (best != nullptr) return FiniteWord(alphabet_, std::vector<Symbol>(best->begin(), best->end()));
  }
  throw std::logic_error("occurrence table lost track of a block count");
}

DiscrepancyReport OccurrenceTable::report() const {
  DiscrepancyReport r;
  r.block_length = block_length_;
  r.symbols = consumed_;
  r.blocks_seen = blocks_seen_;
  r.delta = delta();

  const BigInt n = blocks_seen_;
  const BigInt above = BigInt(max_count_) * universe_ - n;
  const BigInt below = n - BigInt(min_count()) * universe_;
  std::optional<FiniteWord> witness;
  if (above >= below) witness = least_block_with_count(max_count_);
  if (below >= above) {
    FiniteWord low = least_block_with_count(min_count());
    if (!witness || std::lexicographical_compare(low.symbols().begin(), low.symbols().end(),
                                                 witness->symbols().begin(), witness->symbols().end())) {
      witness = std::move(low);
    }
  }
  r.witness = std::move(*witness);
  return r;
}

DiscrepancyReport discrepancy(const FiniteWord& u, std::size_t block_length, TableOptions options) {
  if (block_length == 0) throw ArgumentError("block length must be at least 1");
  if (u.size() < block_length) {
    throw ArgumentError("word of length " + std::to_string(u.size()) + " has no complete block of length " +
                        std::to_string(block_length));
  }
  OccurrenceTable table(u.alphabet(), block_length, options);
  table.push(u.symbols());
  return table.report();
}

std::vector<DiscrepancyReport> discrepancy_series(DigitStream& stream, std::size_t block_length,
                                                  std::span<const std::uint64_t> checkpoints,
                                                  TableOptions options) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < block_length) {
      throw ArgumentError("checkpoint " + std::to_string(checkpoints[i]) + " is shorter than the block length");
    }
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw ArgumentError("checkpoints must be strictly increasing");
    }
  }
  OccurrenceTable table(stream.alphabet(), block_length, options);
  std::vector<DiscrepancyReport> reports;
  reports.reserve(checkpoints.size());
  for (std::uint64_t checkpoint : checkpoints) {
    while (table.consumed() < checkpoint) {
      auto s = stream.next();
      if (!s) {
        throw TruncationError("stream ended after " + std::to_string(table.consumed()) +
                                  " symbols, before checkpoint " + std::to_string(checkpoint),
                              std::move(reports));
      }
      table.push(*s);
    }
    reports.push_back(table.report());
  }
  return reports;
}

// ---------------------------------------------------------------------------
// SlidingCounter

SlidingCounter::SlidingCounter(Alphabet alphabet, std::size_t block_length, TableOptions options)
    : alphabet_(alphabet), block_length_(block_length) {
  if (block_length == 0) throw ArgumentError("block length must be at least 1");
  const std::uint64_t universe = checked_power(alphabet.base(), block_length);
  dense_ = universe != 0 && universe <= options.dense_cap;
  if (dense_) {
    dense_counts_.assign(universe, 0);
    modulus_ = universe / alphabet.base();
  } else if (!options.sparse_fallback) {
    throw ResourceError("sliding table of " + std::to_string(alphabet.base()) + "^" +
                        std::to_string(block_length) + " entries exceeds the cap of " +
                        std::to_string(options.dense_cap));
  } else {
    modulus_ = 0;
  }
}

void SlidingCounter::push(Symbol s) {
  if (!alphabet_.contains(s)) {
    throw ArgumentError("symbol " + std::to_string(s) + " outside base " + std::to_string(alphabet_.base()));
  }
  ++consumed_;
  std::uint64_t* slot;
  if (dense_) {
    rolling_rank_ = (rolling_rank_ % modulus_) * alphabet_.base() + s;
    if (consumed_ < block_length_) return;
    slot = &dense_counts_[rolling_rank_];
  } else {
    window_.push_back(static_cast<char>(s));
    if (window_.size() > block_length_) window_.erase(window_.begin());
    if (consumed_ < block_length_) return;
    slot = &sparse_counts_[window_];
  }
  max_count_ = std::max(max_count_, ++*slot);
}

std::uint64_t SlidingCounter::count(std::span<const Symbol> block) const {
  if (block.size() != block_length_) throw ArgumentError("block length mismatch");
  validate_symbols(alphabet_, block);
  if (dense_) return dense_counts_[lex_rank(alphabet_, block)];
  auto it = sparse_counts_.find(std::string(block.begin(), block.end()));
  return it == sparse_counts_.end() ? 0 : it->second;
}

Rational hot_spot_statistic(const FiniteWord& u, std::size_t max_len, TableOptions options) {
  if (max_len < 1 || max_len > u.size()) {
    throw ArgumentError("hot-spot lengths must satisfy 1 <= max_len <= |u|");
  }
  Rational best = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    SlidingCounter counter(u.alphabet(), len, options);
    for (Symbol s : u.symbols()) counter.push(s);
    Rational value(BigInt(counter.max_count()) * pow_big(u.alphabet().base(), len), BigInt(u.size()));
    best = std::max(best, value);
  }
  return best;
}

}  // namespace normexp
