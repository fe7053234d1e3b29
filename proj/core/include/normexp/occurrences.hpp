#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "normexp/rational.hpp"
#include "normexp/stream.hpp"
#include "normexp/words.hpp"

namespace normexp {

/// Number of aligned occurrences of v in u: complete |v|-blocks of u equal to v.
std::uint64_t aligned_occurrences(const FiniteWord& u, const FiniteWord& v);

/// Number of (possibly overlapping) occurrences of v in u at any position.
std::uint64_t occurrences(const FiniteWord& u, const FiniteWord& v);

struct DiscrepancyReport {
  std::size_t block_length = 0;
  std::uint64_t symbols = 0;       // prefix length the report was taken at
  std::uint64_t blocks_seen = 0;   // floor(symbols / block_length)
  Rational delta;
  FiniteWord witness{Alphabet{2}}; // lexicographically least maximiser
};

struct TableOptions {
  /// Largest base^block_length held in a dense rank-indexed table.
  std::uint64_t dense_cap = std::uint64_t{1} << 24;
  /// Above the cap, switch to a hash table keyed by block content instead of
  /// raising ResourceError.
  bool sparse_fallback = false;
};

/// Aligned block counts for one block length, updated one symbol at a time.
/// delta() is O(1): the table tracks the extreme counts through a histogram
/// of counts, including the blocks that never occurred.
class OccurrenceTable {
 public:
  OccurrenceTable(Alphabet alphabet, std::size_t block_length, TableOptions options = {});

  void push(Symbol s);
  void push(std::span<const Symbol> symbols);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t block_length() const noexcept { return block_length_; }
  std::uint64_t consumed() const noexcept { return consumed_; }
  std::uint64_t blocks_seen() const noexcept { return blocks_seen_; }
  bool dense() const noexcept { return dense_; }

  std::uint64_t count(std::span<const Symbol> block) const;
  std::uint64_t max_count() const noexcept { return max_count_; }
  std::uint64_t min_count() const noexcept;

  /// Exact discrepancy of the consumed prefix. Requires blocks_seen() > 0.
  Rational delta() const;
  /// delta() < epsilon without building the rational.
  bool delta_below(const Rational& epsilon) const;

  DiscrepancyReport report() const;

 private:
  void record_block();
  void bump(std::uint64_t& slot);
  FiniteWord least_block_with_count(std::uint64_t c) const;

  Alphabet alphabet_;
  std::size_t block_length_;
  BigInt universe_;                 // base^block_length
  std::uint64_t universe_saturated_;
  bool dense_;

  std::vector<std::uint64_t> dense_counts_;
  std::unordered_map<std::string, std::uint64_t> sparse_counts_;

  std::uint64_t pending_rank_ = 0;
  std::string pending_;
  std::size_t pending_len_ = 0;

  std::uint64_t consumed_ = 0;
  std::uint64_t blocks_seen_ = 0;
  std::uint64_t distinct_ = 0;
  std::uint64_t max_count_ = 0;
  std::uint64_t min_seen_ = 0;               // least count among seen blocks
  std::vector<std::uint64_t> histogram_;     // histogram_[c] = #blocks with count c >= 1
};

/// Discrepancy of u for block length `block_length`, exact.
DiscrepancyReport discrepancy(const FiniteWord& u, std::size_t block_length,
                              TableOptions options = {});

/// Raised when a stream ends before the last requested checkpoint.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(std::string what, std::vector<DiscrepancyReport> partial)
      : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}
  const std::vector<DiscrepancyReport>& partial() const noexcept { return partial_; }

 private:
  std::vector<DiscrepancyReport> partial_;
};

/// One report per checkpoint, computed in a single pass over the stream.
std::vector<DiscrepancyReport> discrepancy_series(DigitStream& stream, std::size_t block_length,
                                                  std::span<const std::uint64_t> checkpoints,
                                                  TableOptions options = {});

/// Sliding-window occurrence counts of every block of one length.
class SlidingCounter {
 public:
  SlidingCounter(Alphabet alphabet, std::size_t block_length, TableOptions options = {});

  void push(Symbol s);
  std::uint64_t consumed() const noexcept { return consumed_; }
  std::uint64_t max_count() const noexcept { return max_count_; }
  std::uint64_t count(std::span<const Symbol> block) const;

 private:
  Alphabet alphabet_;
  std::size_t block_length_;
  std::uint64_t modulus_;   // base^(block_length-1), for rolling ranks
  bool dense_;
  std::vector<std::uint64_t> dense_counts_;
  std::unordered_map<std::string, std::uint64_t> sparse_counts_;
  std::uint64_t rolling_rank_ = 0;
  std::string window_;
  std::uint64_t consumed_ = 0;
  std::uint64_t max_count_ = 0;
};

/// max over 1 <= l <= max_len and v of length l of occ(u, v) * base^l / |u|.
Rational hot_spot_statistic(const FiniteWord& u, std::size_t max_len, TableOptions options = {});

}  // namespace normexp
