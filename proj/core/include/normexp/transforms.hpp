#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "normexp/pattern.hpp"
#include "normexp/stream.hpp"
#include "normexp/words.hpp"

namespace normexp {

/// Deletes every occurrence of the new symbol (base-1) from a word over the
/// expanded alphabet.
FiniteWord reduce(const FiniteWord& v);

/// Lazy reduction of a stream over the expanded alphabet. position() counts
/// emitted symbols and input_position() counts symbols pulled upstream.
/// A stream that only carries the new symbol never yields; callers must
/// bound their pulls on such input.
class ReduceStream final : public DigitStream {
 public:
  explicit ReduceStream(StreamPtr upstream);

  std::uint64_t input_position() const noexcept { return upstream_->position(); }

 protected:
  std::optional<Symbol> pull() override;

 private:
  StreamPtr upstream_;
  Symbol dropped_;
};

/// Expansion of one order: fills the wildcards of a pattern word with source
/// symbols in order.
class ExpansionContext {
 public:
  explicit ExpansionContext(std::shared_ptr<const PatternWord> pattern);

  const PatternWord& pattern() const noexcept { return *pattern_; }
  unsigned order() const noexcept { return pattern_->order(); }
  Alphabet source_alphabet() const noexcept { return source_; }
  Alphabet expanded_alphabet() const noexcept { return pattern_->expanded_alphabet(); }
  std::size_t source_length() const noexcept { return pattern_->source_length(); }
  std::size_t expanded_length() const noexcept { return pattern_->expanded_length(); }

  /// Appends the expansion of every source_length() block of `source` to
  /// `out`. The caller guarantees length and symbol validity.
  void expand_into(std::span<const Symbol> source, std::vector<Symbol>& out) const;

 private:
  std::shared_ptr<const PatternWord> pattern_;
  Alphabet source_;
  std::vector<Symbol> template_;           // pattern with wildcards zeroed
  std::vector<std::uint32_t> wildcard_at_; // 0-based pattern positions of wildcards
};

/// Expansion of a single block of exactly source_length() symbols.
FiniteWord expand_block(const ExpansionContext& ctx, const FiniteWord& v);

/// Blockwise expansion of a word whose length is a multiple of source_length().
FiniteWord expand_word(const ExpansionContext& ctx, const FiniteWord& v);

}  // namespace normexp
