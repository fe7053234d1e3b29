#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normexp/errors.hpp"

namespace normexp {

using Symbol = std::uint8_t;

/// The symbol universe {0, ..., base-1}. The source alphabet of an expansion
/// has base b; its expanded alphabet has base b+1 and adds the symbol b.
class Alphabet {
 public:
  static constexpr unsigned kMaxBase = 256;

  explicit Alphabet(unsigned base);

  unsigned base() const noexcept { return base_; }
  bool contains(unsigned value) const noexcept { return value < base_; }

  /// The alphabet with one more symbol (the new symbol is the old base).
  Alphabet expanded() const;
  /// Inverse of expanded(); requires base >= 3.
  Alphabet reduced() const;

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  unsigned base_;
};

/// Immutable finite word over an alphabet. Public indexing is 1-based.
class FiniteWord {
 public:
  explicit FiniteWord(Alphabet alphabet) : alphabet_(alphabet) {}
  FiniteWord(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Parses ASCII digits '0'..'9'; requires base <= 10.
  static FiniteWord from_digits(Alphabet alphabet, std::string_view digits);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Symbol at 1-based position i.
  Symbol at(std::size_t i) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& storage() const noexcept { return symbols_; }

  /// ASCII digits; requires base <= 10.
  std::string to_digits() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

/// w[i, j], 1-based inclusive.
FiniteWord substring(const FiniteWord& w, std::size_t i, std::size_t j);

/// The first n symbols.
FiniteWord prefix(const FiniteWord& w, std::size_t n);

/// w with its last n symbols removed.
FiniteWord drop_suffix(const FiniteWord& w, std::size_t n);

FiniteWord concat(const FiniteWord& u, const FiniteWord& v);

/// The rank-th word of length n over the alphabet in lexicographic order.
FiniteWord lex_unrank(Alphabet alphabet, std::size_t n, std::uint64_t rank);

/// Inverse of lex_unrank for words whose rank fits in 64 bits.
std::uint64_t lex_rank(Alphabet alphabet, std::span<const Symbol> word);

/// base^n, or 0 when the power overflows 64 bits.
std::uint64_t checked_power(std::uint64_t base, std::size_t n) noexcept;

/// Throws ArgumentError unless every symbol is valid for the alphabet.
void validate_symbols(Alphabet alphabet, std::span<const Symbol> symbols);

}  // namespace normexp
