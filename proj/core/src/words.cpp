#include "normexp/words.hpp"

#include <algorithm>
#include <string>

#include "normexp/rational.hpp"

namespace normexp {

Alphabet::Alphabet(unsigned base) : base_(base) {
  if (base < 2 || base > kMaxBase) {
    throw ArgumentError("alphabet base must be in [2, 256], got " + std::to_string(base));
  }
}

Alphabet Alphabet::expanded() const {
  if (base_ == kMaxBase) throw ArgumentError("alphabet of 256 symbols cannot be expanded");
  return Alphabet(base_ + 1);
}

Alphabet Alphabet::reduced() const {
  if (base_ < 3) throw ArgumentError("reduced alphabet would have fewer than 2 symbols");
  return Alphabet(base_ - 1);
}

void validate_symbols(Alphabet alphabet, std::span<const Symbol> symbols) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!alphabet.contains(symbols[i])) {
      throw ArgumentError("symbol " + std::to_string(symbols[i]) + " at position " +
                          std::to_string(i + 1) + " outside base " + std::to_string(alphabet.base()));
    }
  }
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  validate_symbols(alphabet_, symbols_);
}

FiniteWord FiniteWord::from_digits(Alphabet alphabet, std::string_view digits) {
  if (alphabet.base() > 10) throw ArgumentError("ASCII digits only cover bases up to 10");
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw ArgumentError(std::string("not a digit: '") + c + "'");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return FiniteWord(alphabet, std::move(symbols));
}

Symbol FiniteWord::at(std::size_t i) const {
  if (i < 1 || i > symbols_.size()) {
    throw RangeError("position " + std::to_string(i) + " outside word of length " +
                     std::to_string(symbols_.size()));
  }
  return symbols_[i - 1];
}

std::string FiniteWord::to_digits() const {
  if (alphabet_.base() > 10) throw ArgumentError("ASCII digits only cover bases up to 10");
  std::string out(symbols_.size(), '0');
  std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                 [](Symbol s) { return static_cast<char>('0' + s); });
  return out;
}

FiniteWord substring(const FiniteWord& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > w.size()) {
    throw RangeError("substring [" + std::to_string(i) + ", " + std::to_string(j) +
                     "] outside word of length " + std::to_string(w.size()));
  }
  auto s = w.symbols();
  return FiniteWord(w.alphabet(), std::vector<Symbol>(s.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                      s.begin() + static_cast<std::ptrdiff_t>(j)));
}

FiniteWord prefix(const FiniteWord& w, std::size_t n) {
  if (n > w.size()) {
    throw RangeError("prefix of length " + std::to_string(n) + " exceeds word length " +
                     std::to_string(w.size()));
  }
  auto s = w.symbols();
  return FiniteWord(w.alphabet(), std::vector<Symbol>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)));
}

FiniteWord drop_suffix(const FiniteWord& w, std::size_t n) {
  if (n > w.size()) {
    throw RangeError("cannot drop " + std::to_string(n) + " symbols from word of length " +
                     std::to_string(w.size()));
  }
  return prefix(w, w.size() - n);
}

FiniteWord concat(const FiniteWord& u, const FiniteWord& v) {
  if (u.alphabet() != v.alphabet()) throw ArgumentError("concatenating words over different alphabets");
  std::vector<Symbol> out(u.storage());
  out.insert(out.end(), v.storage().begin(), v.storage().end());
  return FiniteWord(u.alphabet(), std::move(out));
}

std::uint64_t checked_power(std::uint64_t base, std::size_t n) noexcept {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return 0;
    result *= base;
  }
  return result;
}

FiniteWord lex_unrank(Alphabet alphabet, std::size_t n, std::uint64_t rank) {
  const std::uint64_t total = checked_power(alphabet.base(), n);
  if (total != 0 && rank >= total) {
    throw RangeError("rank " + std::to_string(rank) + " >= " + std::to_string(alphabet.base()) + "^" +
                     std::to_string(n));
  }
  std::vector<Symbol> symbols(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    symbols[k] = static_cast<Symbol>(rank % alphabet.base());
    rank /= alphabet.base();
  }
  return FiniteWord(alphabet, std::move(symbols));
}

std::uint64_t lex_rank(Alphabet alphabet, std::span<const Symbol> word) {
  if (checked_power(alphabet.base(), word.size()) == 0) {
    throw RangeError("rank of a word of length " + std::to_string(word.size()) + " overflows 64 bits");
  }
  std::uint64_t rank = 0;
  for (Symbol s : word) rank = rank * alphabet.base() + s;
  return rank;
}

std::string to_decimal(const Rational& r, int digits) {
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  BigInt whole = num / den;
  BigInt rest = num % den;
  out += whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rest *= 10;
      out += static_cast<char>('0' + static_cast<int>(rest / den));
      rest %= den;
    }
  }
  return out;
}

std::string to_scientific(const Rational& r, int digits) {
  if (r == 0) return "0";
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  // Find e with 10^e <= |r| < 10^(e+1), starting from the digit-count estimate.
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto scaled = [&](long exponent) {  // floor(|r| * 10^(digits - exponent))
    const long shift = digits - exponent;
    if (shift >= 0) return BigInt(num * pow_big(10, static_cast<std::uint64_t>(shift)) / den);
    return BigInt(num / (den * pow_big(10, static_cast<std::uint64_t>(-shift))));
  };
  const BigInt low = pow_big(10, static_cast<std::uint64_t>(digits));
  BigInt mantissa = scaled(e);
  while (mantissa < low) mantissa = scaled(--e);
  while (mantissa >= low * 10) mantissa = scaled(++e);
  std::string m = mantissa.str();
  std::string out = sign + m.substr(0, 1);
  if (digits > 0) out += "." + m.substr(1);
  return out + "e" + (e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
}

}  // namespace normexp
