#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>

#include "normexp/words.hpp"

namespace normexp {

/// Pull-based source of symbols, possibly unbounded. A stream is
/// single-consumer: concurrent calls to next() on one instance are not allowed.
class DigitStream {
 public:
  explicit DigitStream(Alphabet alphabet) : alphabet_(alphabet) {}
  virtual ~DigitStream() = default;

  DigitStream(const DigitStream&) = delete;
  DigitStream& operator=(const DigitStream&) = delete;

  Alphabet alphabet() const noexcept { return alphabet_; }

  /// Number of symbols yielded so far.
  std::uint64_t position() const noexcept { return position_; }

  /// Next symbol, or nullopt once the stream is exhausted.
  std::optional<Symbol> next() {
    auto s = pull();
    if (s) ++position_;
    return s;
  }

 protected:
  virtual std::optional<Symbol> pull() = 0;

 private:
  Alphabet alphabet_;
  std::uint64_t position_ = 0;
};

using StreamPtr = std::unique_ptr<DigitStream>;

/// Finite stream over the symbols of a word.
class WordStream final : public DigitStream {
 public:
  explicit WordStream(FiniteWord word);

 protected:
  std::optional<Symbol> pull() override;

 private:
  FiniteWord word_;
  std::size_t index_ = 0;
};

/// Unbounded stream repeating a nonempty word.
class CyclicStream final : public DigitStream {
 public:
  explicit CyclicStream(FiniteWord period);

 protected:
  std::optional<Symbol> pull() override;

 private:
  FiniteWord period_;
  std::size_t index_ = 0;
};

/// Yields at most `limit` symbols of an upstream stream.
class TakeStream final : public DigitStream {
 public:
  TakeStream(StreamPtr upstream, std::uint64_t limit);

 protected:
  std::optional<Symbol> pull() override;

 private:
  StreamPtr upstream_;
  std::uint64_t remaining_;
};

enum class DigitFormat { ascii, binary };

/// Reads symbols from a byte stream. ASCII format maps '0'..'9' to 0..9 and
/// skips line breaks; binary format takes each byte as a symbol value.
/// Invalid input raises ArgumentError at the offending position.
class IstreamDigitStream final : public DigitStream {
 public:
  IstreamDigitStream(Alphabet alphabet, std::istream& in, DigitFormat format);

 protected:
  std::optional<Symbol> pull() override;

 private:
  std::istream& in_;
  DigitFormat format_;
};

/// Pulls up to n symbols into a word (fewer if the stream ends).
FiniteWord take(DigitStream& stream, std::uint64_t n);

}  // namespace normexp
