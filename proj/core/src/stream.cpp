#include "normexp/stream.hpp"

#include <algorithm>
#include <string>

namespace normexp {

WordStream::WordStream(FiniteWord word) : DigitStream(word.alphabet()), word_(std::move(word)) {}

std::optional<Symbol> WordStream::pull() {
  if (index_ >= word_.size()) return std::nullopt;
  return word_.storage()[index_++];
}

CyclicStream::CyclicStream(FiniteWord period)
    : DigitStream(period.alphabet()), period_(std::move(period)) {
  if (period_.empty()) throw ArgumentError("cyclic stream needs a nonempty period");
}

std::optional<Symbol> CyclicStream::pull() {
  Symbol s = period_.storage()[index_];
  index_ = (index_ + 1) % period_.size();
  return s;
}

TakeStream::TakeStream(StreamPtr upstream, std::uint64_t limit)
    : DigitStream(upstream->alphabet()), upstream_(std::move(upstream)), remaining_(limit) {}

std::optional<Symbol> TakeStream::pull() {
  if (remaining_ == 0) return std::nullopt;
  auto s = upstream_->next();
  if (s) --remaining_;
  return s;
}

IstreamDigitStream::IstreamDigitStream(Alphabet alphabet, std::istream& in, DigitFormat format)
    : DigitStream(alphabet), in_(in), format_(format) {
  if (format_ == DigitFormat::ascii && alphabet.base() > 10) {
    throw ArgumentError("ASCII digit format supports bases up to 10; use the binary format");
  }
}

std::optional<Symbol> IstreamDigitStream::pull() {
  for (;;) {
    int c = in_.get();
    if (c == std::char_traits<char>::eof()) return std::nullopt;
    unsigned value;
    if (format_ == DigitFormat::ascii) {
      if (c == '\n' || c == '\r') continue;
      if (c < '0' || c > '9') {
        throw ArgumentError("invalid digit character at symbol " + std::to_string(position() + 1));
      }
      value = static_cast<unsigned>(c - '0');
    } else {
      value = static_cast<unsigned char>(c);
    }
    if (!alphabet().contains(value)) {
      throw ArgumentError("symbol " + std::to_string(value) + " at position " +
                          std::to_string(position() + 1) + " outside base " +
                          std::to_string(alphabet().base()));
    }
    return static_cast<Symbol>(value);
  }
}

FiniteWord take(DigitStream& stream, std::uint64_t n) {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
  for (std::uint64_t i = 0; i < n; ++i) {
    auto s = stream.next();
    if (!s) break;
    out.push_back(*s);
  }
  return FiniteWord(stream.alphabet(), std::move(out));
}

}  // namespace normexp
