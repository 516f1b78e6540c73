#pragma once

// GF(2^alpha) in a polynomial basis, 1 <= alpha <= 45. Elements are bit
// vectors with bit i holding the coefficient of x^i.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gkspec/errors.hpp"
#include "gkspec/numth.hpp"

namespace gkspec {

inline constexpr unsigned kMaxFieldDegree = 45;

struct FieldElem {
  std::uint64_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

namespace gf2poly {

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

/// a * b mod m over GF(2); requires deg a, deg b < deg m.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const int d = degree(m);
  const std::uint64_t top = std::uint64_t{1} << d;
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return r;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const int db = degree(b);
    while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
    std::swap(a, b);
  }
  return a;
}

/// Ben-Or test: f irreducible iff gcd(f, x^(2^k) - x) = 1 for k = 1..deg(f)/2.
inline bool is_irreducible(std::uint64_t f) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  std::uint64_t h = 0b10;  // x
  for (int k = 1; k <= n / 2; ++k) {
    h = mulmod(h, h, f);
    if (gcd(f, h ^ 0b10) != 1) return false;
  }
  return true;
}

inline std::string to_binary(std::uint64_t p) {
  if (p == 0) return "0b0";
  std::string s = "0b";
  for (int i = degree(p); i >= 0; --i) s.push_back(((p >> i) & 1) ? '1' : '0');
  return s;
}

/// Parses "0b..." (most significant coefficient first).
inline std::uint64_t from_binary(std::string_view text) {
  if (text.substr(0, 2) != "0b" || text.size() == 2) throw InvalidInput("modulus must look like 0b1011");
  if (text.size() - 2 > 64) throw RangeError("modulus wider than 64 bits");
  std::uint64_t v = 0;
  for (char c : text.substr(2)) {
    if (c != '0' && c != '1') throw InvalidInput("bad binary digit in modulus: " + std::string(text));
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace gf2poly

/// A binary field GF(2^alpha) fixed by an irreducible modulus.
class FieldCtx {
 public:
  /// Uses `modulus` if given (must be irreducible of degree alpha), else the
  /// least irreducible polynomial of degree alpha with nonzero constant term.
  static FieldCtx make(unsigned alpha, std::optional<std::uint64_t> modulus = std::nullopt) {
    if (alpha < 1 || alpha > kMaxFieldDegree)
      throw RangeError("field degree must lie in [1, 45], got " + std::to_string(alpha));
    std::uint64_t m = 0;
    if (modulus) {
      m = *modulus;
      if (gf2poly::degree(m) != static_cast<int>(alpha))
        throw InvalidInput("modulus " + gf2poly::to_binary(m) + " does not have degree " + std::to_string(alpha));
      if (!gf2poly::is_irreducible(m)) throw InvalidInput("modulus " + gf2poly::to_binary(m) + " is reducible");
    } else {
      const std::uint64_t top = std::uint64_t{1} << alpha;
      for (m = top | 1; !gf2poly::is_irreducible(m); m += 2) {
      }
    }
    return FieldCtx(alpha, m);
  }

  unsigned alpha() const { return alpha_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << alpha_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }

  FieldElem elem(std::uint64_t bits) const {
    if (bits >= size()) throw InvalidInput("field element " + std::to_string(bits) + " has degree >= alpha");
    return {bits};
  }

  FieldElem add(FieldElem a, FieldElem b) const { return {a.bits ^ b.bits}; }
  FieldElem mul(FieldElem a, FieldElem b) const { return {gf2poly::mulmod(a.bits, b.bits, modulus_)}; }

  FieldElem pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; throws on zero.
  FieldElem inv(FieldElem a) const {
    if (a.is_zero()) throw InvalidInput("zero has no inverse");
    return pow(a, size() - 2);
  }

  /// x -> x^(2^k), an automorphism of the field.
  FieldElem frobenius(FieldElem a, unsigned k = 1) const {
    for (unsigned i = 0; i < k % alpha_; ++i) a = mul(a, a);
    return a;
  }

  /// Least element (as an integer) generating the multiplicative group.
  FieldElem primitive_element() const {
    const std::uint64_t order = size() - 1;
    if (order == 1) return one();
    const auto primes = prime_set(order);
    for (std::uint64_t g = 2; g < size(); ++g) {
      bool generates = true;
      for (u128 p : primes)
        if (pow({g}, order / static_cast<std::uint64_t>(p)) == one()) {
          generates = false;
          break;
        }
      if (generates) return {g};
    }
    throw std::logic_error("no primitive element found");
  }

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  FieldCtx(unsigned alpha, std::uint64_t modulus) : alpha_(alpha), modulus_(modulus) {}

  unsigned alpha_;
  std::uint64_t modulus_;
};

inline FieldCtx field_make(unsigned alpha, std::optional<std::uint64_t> modulus = std::nullopt) {
  return FieldCtx::make(alpha, modulus);
}

}  // namespace gkspec
