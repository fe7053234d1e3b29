#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include "normexp/rational.hpp"
#include "normexp/stream.hpp"
#include "normexp/words.hpp"

namespace normexp {

/// One position of a wildcard mask: the new symbol b, or a wildcard.
enum class Slot : std::uint8_t { fixed, wildcard };

using Mask = std::vector<Slot>;

/// Positionwise mask of a word over the expanded alphabet: the new symbol
/// (base-1) stays fixed, every other symbol becomes a wildcard.
Mask wildcard(const FiniteWord& v);
/// Same, for raw symbols; throws ArgumentError on a symbol outside `expanded`.
Mask wildcard(std::span<const Symbol> v, Alphabet expanded);

struct PatternLengths {
  BigInt source;    // wildcards in the order-n pattern: n b (b+1)^(n-1)
  BigInt expanded;  // pattern length: n (b+1)^n
};

/// Closed-form lengths of the order-n pattern over b+1 symbols.
PatternLengths lengths(unsigned n, unsigned b);

/// Pattern word of one order: the word over b+1 symbols, its mask and the
/// wildcard position map m(n, i).
class PatternWord {
 public:
  PatternWord(unsigned order, FiniteWord word);

  unsigned order() const noexcept { return order_; }
  /// b, the base of the source alphabet.
  unsigned source_base() const noexcept { return word_.alphabet().base() - 1; }
  Alphabet expanded_alphabet() const noexcept { return word_.alphabet(); }

  const FiniteWord& word() const noexcept { return word_; }
  const Mask& mask() const noexcept { return mask_; }

  /// Number of wildcards among positions 1..i (1-based, 1 <= i <= expanded_length()).
  std::size_t wildcards_through(std::size_t i) const;

  std::size_t source_length() const noexcept { return source_length_; }
  std::size_t expanded_length() const noexcept { return word_.size(); }

 private:
  unsigned order_;
  FiniteWord word_;
  Mask mask_;
  std::vector<std::uint32_t> wildcards_through_;
  std::size_t source_length_;
};

inline constexpr std::uint64_t kDefaultPatternCap = std::uint64_t{1} << 26;

/// Concatenation, in lexicographic order, of all words of length n over
/// b+1 symbols. Accepts b >= 1 (a binary expanded alphabet) for pattern
/// inspection; expansion itself needs b >= 2.
PatternWord champernowne_like(unsigned n, unsigned b, std::uint64_t cap = kDefaultPatternCap);

/// Source of zero-discrepancy pattern words, one per order.
class PatternProvider {
 public:
  virtual ~PatternProvider() = default;
  virtual unsigned source_base() const = 0;
  virtual std::shared_ptr<const PatternWord> pattern(unsigned order) const = 0;
};

/// Champernowne-like patterns, generated on first use and cached.
/// Lookups may run concurrently; insertion takes an exclusive lock.
class ChampernownePatterns final : public PatternProvider {
 public:
  explicit ChampernownePatterns(unsigned b, std::uint64_t cap = kDefaultPatternCap);

  unsigned source_base() const override { return b_; }
  std::shared_ptr<const PatternWord> pattern(unsigned order) const override;

 private:
  unsigned b_;
  std::uint64_t cap_;
  mutable std::shared_mutex mutex_;
  mutable std::map<unsigned, std::shared_ptr<const PatternWord>> cache_;
};

/// Base-b digits of 1, 2, 3, ... concatenated. Unbounded.
class ChampernowneStream final : public DigitStream {
 public:
  explicit ChampernowneStream(unsigned b);

 protected:
  std::optional<Symbol> pull() override;

 private:
  void load_next_number();

  std::uint64_t number_ = 0;
  std::vector<Symbol> digits_;  // most significant first
  std::size_t index_ = 0;
};

}  // namespace normexp
