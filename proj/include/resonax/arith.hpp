#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace resonax {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt floor_div(const BigInt& num, const BigInt& den);

inline std::strong_ordering compare(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Lexicographic comparison of integer vectors.
struct LexLess {
  bool operator()(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;
};

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// True iff `value` is representable as int64.
bool fits_int64(const BigInt& value);
std::int64_t to_int64(const BigInt& value);
BigInt from_int64(std::int64_t value);

}  // namespace resonax
