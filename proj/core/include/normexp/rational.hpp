#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace normexp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

/// Decimal rendering for human-readable output only; never compared.
std::string to_decimal(const Rational& r, int digits = 6);

/// Scientific rendering (e.g. "3.33e-66") for human-readable output only.
std::string to_scientific(const Rational& r, int digits = 3);

/// "num/den" in lowest terms.
inline std::string to_fraction(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace normexp
