#pragma once

// Slow, independent reference computations used to freeze and cross-check
// the library's values. Nothing here shares code paths with the library
// beyond the u128 type and the group representations being enumerated.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkspec/gkspec.hpp"

namespace oracle {

using gkspec::u128;
using big = boost::multiprecision::cpp_int;

inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Least d >= 1 with q^d = 1 (mod r), by stepping.
inline std::uint64_t order_mod(std::uint64_t q, std::uint64_t r) {
  std::uint64_t x = q % r, d = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(u128{x} * q % r);
    ++d;
  }
  return d;
}

inline big pow_big(std::uint64_t q, unsigned n) {
  big out = 1;
  for (unsigned i = 0; i < n; ++i) out *= q;
  return out;
}

inline int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return mu;
}

/// Phi_n(q) = prod_{d | n} (q^d - 1)^moebius(n/d).
inline big cyclotomic_value(std::uint64_t q, unsigned n) {
  big num = 1, den = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = moebius(n / d);
    if (mu == 1) num *= pow_big(q, d) - 1;
    if (mu == -1) den *= pow_big(q, d) - 1;
  }
  return num / den;
}

/// Primitive prime divisors of q^n - 1 exist iff Phi_n(q) has a prime factor
/// other than the largest prime factor of n.
inline bool has_primitive_divisor(std::uint64_t q, unsigned n) {
  big phi = cyclotomic_value(q, n);
  unsigned largest = 1;
  for (unsigned p = 2, m = n; p <= m; ++p)
    while (m % p == 0) {
      largest = p;
      m /= p;
    }
  if (largest > 1)
    while (phi % largest == 0) phi /= largest;
  return phi > 1;
}

/// Maximum coclique by scanning all vertex subsets.
inline std::size_t coclique_by_subsets(const gkspec::PrimeGraph& g) {
  const std::size_t n = g.vertices.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (std::size_t i = 0; i < n && independent; ++i)
      for (std::size_t j = i + 1; j < n && independent; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(g.vertices[i], g.vertices[j])) independent = false;
    if (independent) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
  }
  return best;
}

/// Maximal element orders of a group, enumerating it as permutations and
/// finding each order by repeated multiplication.
inline std::vector<u128> mu_by_permutations(const gkspec::GroupSpec& spec) {
  auto rep = std::make_shared<const gkspec::PermRep>(spec);
  const auto g = gkspec::enumerate(rep, 1u << 22);
  std::set<std::uint64_t> orders;
  for (const auto& x : g.elements()) orders.insert(gkspec::order_by_powering(*rep, x, 1u << 22));
  std::vector<u128> mu;
  for (std::uint64_t a : orders) {
    bool maximal = true;
    for (std::uint64_t b : orders)
      if (b != a && b % a == 0) maximal = false;
    if (maximal) mu.push_back(a);
  }
  return mu;
}

/// All element orders from a spectrum's maximal elements.
inline std::set<u128> divisors_of_all(const std::vector<u128>& mu) {
  std::set<u128> out;
  for (u128 m : mu)
    for (u128 d = 1; d <= m; ++d)
      if (m % d == 0) out.insert(d);
  return out;
}

}  // namespace oracle
