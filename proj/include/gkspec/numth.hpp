#pragma once

// Exact integer services over 128-bit unsigned integers: factorization
// (trial division, then Pollard-Brent rho), BPSW primality, multiplicative
// orders and Bang-Zsigmondy primitive prime divisors.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gkspec/errors.hpp"
#include "gkspec/int128.hpp"

namespace gkspec {

/// Largest integer accepted by factorize (exclusive): 2^127.
inline constexpr u128 kFactorLimit = u128{1} << 127;

struct FactorOptions {
  /// Primes below this bound are removed by trial division.
  std::uint64_t trial_bound = 1'000'000;
  /// Total rho iterations allowed for one factorize() call.
  std::uint64_t rho_budget = std::uint64_t{1} << 28;
  /// First polynomial constant tried by rho; successive attempts use seed+1, seed+2, ...
  std::uint64_t seed = 1;
};

struct Factorization {
  std::map<u128, unsigned> factors;

  u128 value() const {
    u128 v = 1;
    for (const auto& [p, e] : factors)
      for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
  }

  std::vector<u128> primes() const {
    std::vector<u128> out;
    out.reserve(factors.size());
    for (const auto& [p, e] : factors) out.push_back(p);
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

struct U256 {
  u128 hi;
  u128 lo;
};

inline U256 mul_wide(u128 a, u128 b) {
  const std::uint64_t a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
  const std::uint64_t b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
  const u128 p00 = u128{a0} * b0;
  const u128 p01 = u128{a0} * b1;
  const u128 p10 = u128{a1} * b0;
  const u128 p11 = u128{a1} * b1;
  const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
  const u128 lo = (mid << 64) | static_cast<std::uint64_t>(p00);
  const u128 hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return {hi, lo};
}

/// Montgomery arithmetic modulo an odd n < 2^127 with R = 2^128.
class Montgomery {
 public:
  explicit Montgomery(u128 n) : n_(n) {
    u128 inv = n;  // correct to 3 bits for odd n; each Newton step doubles that
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv_ = -inv;
    u128 r = (-n) % n;  // 2^128 mod n
    one_ = r;
    for (int i = 0; i < 128; ++i) r = add(r, r);
    r2_ = r;  // 2^256 mod n
  }

  u128 modulus() const { return n_; }
  u128 one() const { return one_; }

  u128 to(u128 a) const { return mul(a % n_, r2_); }
  u128 from(u128 a) const { return reduce({0, a}); }

  u128 mul(u128 a, u128 b) const { return reduce(mul_wide(a, b)); }

  u128 add(u128 a, u128 b) const {
    const u128 s = a + b;  // a, b < n < 2^127
    return s >= n_ ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n_ - b); }
  u128 half(u128 a) const { return (a & 1) ? (a + n_) >> 1 : a >> 1; }

  u128 pow(u128 base, u128 exp) const {
    u128 r = one_;
    while (exp != 0) {
      if (exp & 1) r = mul(r, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return r;
  }

 private:
  u128 reduce(U256 t) const {
    const u128 m = t.lo * neg_inv_;
    const U256 mn = mul_wide(m, n_);
    const u128 carry = t.lo != 0 ? 1 : 0;  // t.lo + mn.lo == 0 mod 2^128
    u128 r = t.hi + mn.hi + carry;
    return r >= n_ ? r - n_ : r;
  }

  u128 n_;
  u128 neg_inv_;
  u128 one_;
  u128 r2_;
};

inline const std::vector<std::uint32_t>& small_primes(std::uint64_t bound) {
  // Sieve once up to the largest bound any caller may use; callers stop at their own bound.
  static const std::vector<std::uint32_t> table = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return ps;
  }();
  if (bound > 1'000'000) throw RangeError("trial-division bound above 10^6 is not supported");
  return table;
}

inline u128 isqrt(u128 n) {
  if (n < 2) return n;
  u128 x = u128{1} << ((bit_width(n) + 1) / 2);
  while (true) {
    const u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

inline int jacobi(u128 a, u128 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool miller_rabin_base2(const Montgomery& mg, u128 n) {
  u128 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const u128 minus_one = mg.sub(0, mg.one());
  u128 x = mg.pow(mg.to(2), d);
  if (x == mg.one() || x == minus_one) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mg.mul(x, x);
    if (x == minus_one) return true;
  }
  return false;
}

// Strong Lucas probable-prime test with Selfridge's parameters (P = 1).
inline bool strong_lucas(const Montgomery& mg, u128 n) {
  std::int64_t d_signed = 5;
  while (true) {
    const u128 d_abs = static_cast<u128>(d_signed < 0 ? -d_signed : d_signed);
    const u128 d_mod = d_signed < 0 ? (n - d_abs % n) % n : d_abs % n;
    const int j = jacobi(d_mod, n);
    if (j == -1) break;
    if (j == 0 && d_abs != n) return false;
    d_signed = d_signed > 0 ? -(d_signed + 2) : -d_signed + 2;
  }
  // Q = (1 - D) / 4
  const std::int64_t q_signed = (1 - d_signed) / 4;
  const u128 q_abs = static_cast<u128>(q_signed < 0 ? -q_signed : q_signed);
  const u128 q_mod = q_signed < 0 ? (n - q_abs % n) % n : q_abs % n;
  const u128 d_abs = static_cast<u128>(d_signed < 0 ? -d_signed : d_signed);
  const u128 dd_mod = d_signed < 0 ? (n - d_abs % n) % n : d_abs % n;

  const u128 q_m = mg.to(q_mod);
  const u128 d_m = mg.to(dd_mod);

  u128 k = n + 1;  // n < 2^127, no overflow
  unsigned s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }

  u128 u = mg.one(), v = mg.one(), qk = q_m;  // U_1, V_1 (P = 1), Q^1
  const unsigned bits = bit_width(k);
  for (int i = static_cast<int>(bits) - 2; i >= 0; --i) {
    u = mg.mul(u, v);
    v = mg.sub(mg.mul(v, v), mg.add(qk, qk));
    qk = mg.mul(qk, qk);
    if ((k >> i) & 1) {
      const u128 nu = mg.half(mg.add(u, v));
      const u128 nv = mg.half(mg.add(mg.mul(d_m, u), v));
      u = nu;
      v = nv;
      qk = mg.mul(qk, q_m);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = mg.sub(mg.mul(v, v), mg.add(qk, qk));
    qk = mg.mul(qk, qk);
    if (v == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Baillie-PSW primality test; exact below 2^64.
inline bool is_prime(u128 n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  if (n >= kFactorLimit) throw RangeError("is_prime: value " + to_string(n) + " is not below 2^127");
  const detail::Montgomery mg(n);
  if (!detail::miller_rabin_base2(mg, n)) return false;
  const u128 r = detail::isqrt(n);
  if (r * r == n) return false;
  return detail::strong_lucas(mg, n);
}

namespace detail {

inline u128 pollard_brent(u128 n, std::uint64_t c0, std::uint64_t& budget) {
  const Montgomery mg(n);
  for (std::uint64_t c_raw = c0;; ++c_raw) {
    const u128 c = mg.to(c_raw);
    auto f = [&](u128 x) { return mg.add(mg.mul(x, x), c); };
    u128 y = mg.to(2), x = y, ys = y, acc = mg.one(), g = 1;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        if (budget < steps)
          throw BudgetExceeded("factorization of " + to_string(n) +
                               " not completed within the rho budget; increase the budget or reduce alpha");
        budget -= steps;
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          acc = mg.mul(acc, x > y ? x - y : y - x);
        }
        g = gcd(acc, n);
      }
    }
    if (g == n) {
      // The batch overshot; replay one step at a time from the saved point.
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_rec(u128 n, std::map<u128, unsigned>& out, std::uint64_t seed, std::uint64_t& budget) {
  if (n == 1) return;
  if ((n & 1) == 0) {
    ++out[2];
    factor_rec(n >> 1, out, seed, budget);
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u128 r = isqrt(n);
  if (r * r == n) {
    factor_rec(r, out, seed, budget);
    factor_rec(r, out, seed, budget);
    return;
  }
  const u128 d = pollard_brent(n, seed, budget);
  factor_rec(d, out, seed, budget);
  factor_rec(n / d, out, seed, budget);
}

}  // namespace detail

/// Exact prime factorization of 1 <= n < 2^127.
inline Factorization factorize(u128 n, const FactorOptions& opts = {}) {
  if (n == 0) throw RangeError("factorize: n must be positive");
  if (n >= kFactorLimit) throw RangeError("factorize: " + to_string(n) + " is not below 2^127");
  Factorization f;
  for (std::uint32_t p : detail::small_primes(opts.trial_bound)) {
    if (p >= opts.trial_bound) break;
    if (u128{p} * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.factors[p] = e;
  }
  if (n == 1) return f;
  std::uint64_t budget = opts.rho_budget;
  detail::factor_rec(n, f.factors, opts.seed, budget);
  return f;
}

/// The set of prime divisors of n, ascending.
inline std::vector<u128> prime_set(u128 n, const FactorOptions& opts = {}) { return factorize(n, opts).primes(); }

inline u128 mod_pow(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  if ((m & 1) == 0 || m >= kFactorLimit) {
    // Binary ladder with modular doubling; only taken for even moduli.
    auto mulmod = [m](u128 a, u128 b) {
      u128 r = 0;
      a %= m;
      while (b != 0) {
        if (b & 1) r = (r >= m - a) ? r - (m - a) : r + a;
        a = (a >= m - a) ? a - (m - a) : a + a;
        b >>= 1;
      }
      return r;
    };
    u128 r = 1 % m;
    base %= m;
    while (exp != 0) {
      if (exp & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      exp >>= 1;
    }
    return r;
  }
  const detail::Montgomery mg(m);
  return mg.from(mg.pow(mg.to(base), exp));
}

/// Least d >= 1 with q^d = 1 (mod r), for a prime r not dividing q.
inline u128 multiplicative_order(u128 q, u128 r, const FactorOptions& opts = {}) {
  if (!is_prime(r)) throw InvalidInput("multiplicative_order: modulus " + to_string(r) + " is not prime");
  if (q % r == 0) throw InvalidInput("multiplicative_order: " + to_string(r) + " divides " + to_string(q));
  u128 d = r - 1;
  for (const auto& [p, e] : factorize(r - 1, opts).factors) {
    for (unsigned i = 0; i < e && mod_pow(q, d / p, r) == 1; ++i) d /= p;
  }
  return d;
}

/// q is a Mersenne prime iff q + 1 is a power of two and q is prime.
inline bool is_mersenne_prime(u128 q) {
  const u128 next = q + 1;
  return q >= 3 && (next & (next - 1)) == 0 && is_prime(q);
}

/// Which exceptional case of the Bang-Zsigmondy theorem applies.
/// For arbitrary integers q the n = 2 case is "q + 1 is a power of 2", which
/// also catches composite q such as 15; that case gets its own marker.
enum class ZsigmondyException {
  TwoSix,                  ///< q = 2 and n = 6
  MersenneSquare,          ///< q is a Mersenne prime and n = 2
  CompositeMersenneSquare  ///< q + 1 a power of 2, q composite, n = 2
};

inline std::string to_string(ZsigmondyException e) {
  switch (e) {
    case ZsigmondyException::TwoSix: return "q=2,n=6";
    case ZsigmondyException::MersenneSquare: return "mersenne-q,n=2";
    case ZsigmondyException::CompositeMersenneSquare: return "composite-mersenne-q,n=2";
  }
  return "?";
}

struct PrimitivePrimeDivisor {
  u128 base;
  unsigned exponent;
  std::variant<u128, ZsigmondyException> result;

  bool has_prime() const { return std::holds_alternative<u128>(result); }
  u128 prime() const { return std::get<u128>(result); }
  ZsigmondyException exception() const { return std::get<ZsigmondyException>(result); }
};

/// Part of q^n - 1 coprime to every q^d - 1 with d < n.
inline u128 primitive_part(u128 q, unsigned n) {
  if (q < 2 || n < 1) throw RangeError("primitive_part: need q >= 2 and n >= 1");
  const auto qn = checked_pow(q, n);
  if (!qn || *qn - 1 >= kFactorLimit)
    throw RangeError("primitive_part: " + to_string(q) + "^" + std::to_string(n) + " - 1 is not below 2^127");
  u128 a = *qn - 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const u128 g0 = *checked_pow(q, d) - 1;
    for (u128 g = gcd(a, g0); g > 1; g = gcd(a, g)) a /= g;
  }
  return a;
}

/// The least primitive prime divisor of q^n - 1, or the Bang-Zsigmondy
/// exception that explains its absence.
inline PrimitivePrimeDivisor primitive_prime_divisor(u128 q, unsigned n, const FactorOptions& opts = {}) {
  if (q < 2 || n < 2) throw RangeError("primitive_prime_divisor: need q >= 2 and n >= 2");
  const u128 part = primitive_part(q, n);
  const bool two_six = q == 2 && n == 6;
  const bool mersenne = n == 2 && is_mersenne_prime(q);
  const bool composite_mersenne = n == 2 && !mersenne && ((q + 1) & q) == 0;
  if (part == 1) {
    if (two_six) return {q, n, ZsigmondyException::TwoSix};
    if (mersenne) return {q, n, ZsigmondyException::MersenneSquare};
    if (composite_mersenne) return {q, n, ZsigmondyException::CompositeMersenneSquare};
    throw std::logic_error("no primitive prime divisor outside the Bang-Zsigmondy exceptions");
  }
  if (two_six || mersenne || composite_mersenne) throw std::logic_error("primitive prime divisor found in an exceptional case");
  return {q, n, factorize(part, opts).factors.begin()->first};
}

}  // namespace gkspec
