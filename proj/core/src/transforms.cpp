#include "normexp/transforms.hpp"

#include <algorithm>
#include <string>

namespace normexp {

FiniteWord reduce(const FiniteWord& v) {
  const Alphabet source = v.alphabet().reduced();
  const Symbol fresh = static_cast<Symbol>(source.base());
  std::vector<Symbol> kept;
  kept.reserve(v.size());
  std::copy_if(v.storage().begin(), v.storage().end(), std::back_inserter(kept),
               [fresh](Symbol s) { return s != fresh; });
  return FiniteWord(source, std::move(kept));
}

ReduceStream::ReduceStream(StreamPtr upstream)
    : DigitStream(upstream->alphabet().reduced()),
      upstream_(std::move(upstream)),
      dropped_(static_cast<Symbol>(alphabet().base())) {}

std::optional<Symbol> ReduceStream::pull() {
  for (;;) {
    auto s = upstream_->next();
    if (!s || *s != dropped_) return s;
  }
}

namespace {
const PatternWord& checked(const std::shared_ptr<const PatternWord>& p) {
  if (!p) throw ArgumentError("expansion context needs a pattern word");
  return *p;
}
}  // namespace

ExpansionContext::ExpansionContext(std::shared_ptr<const PatternWord> pattern)
    : pattern_(std::move(pattern)), source_(checked(pattern_).expanded_alphabet().reduced()) {
  const auto& word = pattern_->word().storage();
  const auto& mask = pattern_->mask();
  template_.assign(word.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (mask[i] == Slot::fixed) {
      template_[i] = word[i];
    } else {
      wildcard_at_.push_back(static_cast<std::uint32_t>(i));
    }
  }
}

void ExpansionContext::expand_into(std::span<const Symbol> source, std::vector<Symbol>& out) const {
  const std::size_t block = wildcard_at_.size();
  out.reserve(out.size() + source.size() / block * template_.size());
  for (std::size_t start = 0; start + block <= source.size(); start += block) {
    const std::size_t base = out.size();
    out.insert(out.end(), template_.begin(), template_.end());
    for (std::size_t k = 0; k < block; ++k) out[base + wildcard_at_[k]] = source[start + k];
  }
}

FiniteWord expand_block(const ExpansionContext& ctx, const FiniteWord& v) {
  if (v.size() != ctx.source_length()) {
    throw ArgumentError("order-" + std::to_string(ctx.order()) + " expansion takes blocks of " +
                        std::to_string(ctx.source_length()) + " symbols, got " + std::to_string(v.size()));
  }
  return expand_word(ctx, v);
}

FiniteWord expand_word(const ExpansionContext& ctx, const FiniteWord& v) {
  if (v.alphabet() != ctx.source_alphabet()) {
    throw ArgumentError("word alphabet does not match the expansion's source alphabet");
  }
  if (v.size() % ctx.source_length() != 0) {
    throw ArgumentError("word length " + std::to_string(v.size()) + " is not a multiple of " +
                        std::to_string(ctx.source_length()));
  }
  std::vector<Symbol> out;
  ctx.expand_into(v.symbols(), out);
  return FiniteWord(ctx.expanded_alphabet(), std::move(out));
}

}  // namespace normexp
