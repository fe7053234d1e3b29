#include "normexp/pattern.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace normexp {

Mask wildcard(std::span<const Symbol> v, Alphabet expanded) {
  validate_symbols(expanded, v);
  const Symbol fresh = static_cast<Symbol>(expanded.base() - 1);
  Mask mask(v.size());
  std::transform(v.begin(), v.end(), mask.begin(),
                 [fresh](Symbol s) { return s == fresh ? Slot::fixed : Slot::wildcard; });
  return mask;
}

Mask wildcard(const FiniteWord& v) { return wildcard(v.symbols(), v.alphabet()); }

PatternLengths lengths(unsigned n, unsigned b) {
  if (n < 1) throw ArgumentError("pattern order must be at least 1");
  if (b < 1) throw ArgumentError("source base must be at least 1");
  const BigInt below = pow_big(b + 1, n - 1);
  return {BigInt(n) * b * below, BigInt(n) * (b + 1) * below};
}

PatternWord::PatternWord(unsigned order, FiniteWord word)
    : order_(order), word_(std::move(word)), mask_(wildcard(word_)) {
  if (order_ < 1) throw ArgumentError("pattern order must be at least 1");
  if (word_.size() > UINT32_MAX) throw ResourceError("pattern word too long for its position map");
  wildcards_through_.resize(word_.size());
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] == Slot::wildcard) ++seen;
    wildcards_through_[i] = seen;
  }
  source_length_ = seen;
}

std::size_t PatternWord::wildcards_through(std::size_t i) const {
  if (i < 1 || i > wildcards_through_.size()) {
    throw RangeError("pattern position " + std::to_string(i) + " outside [1, " +
                     std::to_string(wildcards_through_.size()) + "]");
  }
  return wildcards_through_[i - 1];
}

PatternWord champernowne_like(unsigned n, unsigned b, std::uint64_t cap) {
  const PatternLengths len = lengths(n, b);
  if (len.expanded > cap) {
    throw ResourceError("order-" + std::to_string(n) + " pattern over " + std::to_string(b + 1) +
                        " symbols has " + len.expanded.str() + " symbols, above the cap of " +
                        std::to_string(cap));
  }
  const Alphabet expanded(b + 1);
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(len.expanded));
  std::vector<Symbol> current(n, 0);
  for (;;) {
    symbols.insert(symbols.end(), current.begin(), current.end());
    std::size_t k = n;
    while (k > 0 && current[k - 1] == b) current[--k] = 0;
    if (k == 0) break;
    ++current[k - 1];
  }
  return PatternWord(n, FiniteWord(expanded, std::move(symbols)));
}

ChampernownePatterns::ChampernownePatterns(unsigned b, std::uint64_t cap) : b_(b), cap_(cap) {
  if (b < 2) throw ArgumentError("source base must be at least 2");
}

std::shared_ptr<const PatternWord> ChampernownePatterns::pattern(unsigned order) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(order); it != cache_.end()) return it->second;
  }
  auto fresh = std::make_shared<const PatternWord>(champernowne_like(order, b_, cap_));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(order, std::move(fresh)).first->second;
}

ChampernowneStream::ChampernowneStream(unsigned b) : DigitStream(Alphabet(b)) {}

void ChampernowneStream::load_next_number() {
  ++number_;
  digits_.clear();
  const unsigned base = alphabet().base();
  for (std::uint64_t x = number_; x > 0; x /= base) digits_.push_back(static_cast<Symbol>(x % base));
  std::reverse(digits_.begin(), digits_.end());
  index_ = 0;
}

std::optional<Symbol> ChampernowneStream::pull() {
  if (index_ == digits_.size()) load_next_number();
  return digits_[index_++];
}

}  // namespace normexp
