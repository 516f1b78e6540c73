#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "gkspec/errors.hpp"

namespace gkspec {

using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Parses an unsigned decimal integer; rejects signs, blanks and overflow.
inline u128 parse_u128(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty integer literal");
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    const auto d = static_cast<unsigned>(c - '0');
    if (v > (kU128Max - d) / 10) throw OverflowError("integer literal too large: " + std::string(text));
    v = v * 10 + d;
  }
  return v;
}

inline std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) return std::nullopt;
  return a * b;
}

inline std::optional<u128> checked_add(u128 a, u128 b) {
  if (b > kU128Max - a) return std::nullopt;
  return a + b;
}

inline u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// lcm(a, b); throws OverflowError when the result leaves 128 bits.
inline u128 lcm(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  const auto r = checked_mul(a / gcd(a, b), b);
  if (!r) throw OverflowError("lcm(" + to_string(a) + ", " + to_string(b) + ") overflows 128 bits");
  return *r;
}

/// base^exp, or nullopt on overflow.
inline std::optional<u128> checked_pow(u128 base, unsigned exp) {
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    const auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

inline unsigned bit_width(u128 v) {
  unsigned w = 0;
  while (v != 0) {
    ++w;
    v >>= 1;
  }
  return w;
}

}  // namespace gkspec
