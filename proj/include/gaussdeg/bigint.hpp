#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "gaussdeg/errors.hpp"

namespace gaussdeg {

// Exact signed integer. Every degree, count and coefficient in the library
// is one of these; no operation ever rounds.
using BigInt = boost::multiprecision::cpp_int;

// Canonical decimal form: '-' for negatives, no leading zeros, "0" for zero.
inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Strict inverse of to_decimal: optional '-', then one or more digits.
// No '+', whitespace, exponents or radix prefixes.
inline BigInt from_decimal(std::string_view text) {
  std::size_t first = 0;
  if (!text.empty() && text[0] == '-') first = 1;
  if (first == text.size())
    throw DomainError("from_decimal: no digits in \"" + std::string(text) + "\"");
  for (std::size_t i = first; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw DomainError("from_decimal: invalid character in \"" +
                        std::string(text) + "\"");
  return BigInt(std::string(text));
}

// (-1)^e for any integer e, including negative exponents such as
// dim C = g - 2d - 1 at g = 2d.
inline int parity_sign(long long e) noexcept { return e % 2 == 0 ? 1 : -1; }

// FNV-1a over the canonical decimal form. Used only to bucket candidate
// equal values in scans; every bucketed pair is re-checked exactly.
inline std::uint64_t decimal_hash(std::string_view decimal) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : decimal) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace gaussdeg
