#pragma once

// Spectra (sets of element orders) kept by their divisibility-maximal
// elements, prime graphs, cocliques and the four-prime nonsolvability test.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkspec/errors.hpp"
#include "gkspec/int128.hpp"
#include "gkspec/numth.hpp"

namespace gkspec {

/// A divisor-closed set of positive integers, stored as its maximal
/// elements under divisibility (ascending). Never empty: the trivial
/// group has mu = [1].
class Spectrum {
 public:
  Spectrum() : mu_{1} {}

  /// Divisibility-maximal sublist of `orders`, sorted and deduplicated.
  static Spectrum normalize(std::span<const u128> orders) {
    if (orders.empty()) throw InvalidInput("normalize: empty list of orders");
    std::vector<u128> v(orders.begin(), orders.end());
    if (std::find(v.begin(), v.end(), u128{0}) != v.end()) throw InvalidInput("normalize: orders must be >= 1");
    std::sort(v.begin(), v.end(), std::greater<>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<u128> kept;
    for (u128 x : v) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [x](u128 k) { return k % x == 0; });
      if (!dominated) kept.push_back(x);
    }
    std::reverse(kept.begin(), kept.end());
    Spectrum s;
    s.mu_ = std::move(kept);
    return s;
  }

  static Spectrum normalize(std::initializer_list<u128> orders) {
    return normalize(std::span<const u128>(orders.begin(), orders.size()));
  }

  const std::vector<u128>& mu() const { return mu_; }

  /// n lies in the spectrum iff it divides some maximal element.
  bool contains(u128 n) const {
    if (n == 0) return false;
    return std::any_of(mu_.begin(), mu_.end(), [n](u128 m) { return m % n == 0; });
  }

  /// lcm of all element orders.
  u128 exponent() const {
    u128 e = 1;
    for (u128 m : mu_) e = lcm(e, m);
    return e;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<u128> mu_;
};

inline Spectrum normalize(std::span<const u128> orders) { return Spectrum::normalize(orders); }

inline bool contains(const Spectrum& s, u128 n) { return s.contains(n); }

/// Spectrum of a direct product: orders of pairs are lcms of component orders.
inline Spectrum lcm_product(const Spectrum& a, const Spectrum& b) {
  std::vector<u128> out;
  out.reserve(a.mu().size() * b.mu().size());
  for (u128 x : a.mu())
    for (u128 y : b.mu()) out.push_back(lcm(x, y));
  return Spectrum::normalize(out);
}

inline bool isospectral(const Spectrum& a, const Spectrum& b) { return a.mu() == b.mu(); }

// ---------------------------------------------------------------------------
// Prime graph

struct PrimeGraph {
  std::vector<u128> vertices;                 // ascending primes
  std::vector<std::pair<u128, u128>> edges;   // (p, q) with p < q, lexicographic

  bool adjacent(u128 p, u128 q) const {
    if (p > q) std::swap(p, q);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
  }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

inline std::vector<u128> spectrum_primes(const Spectrum& s, const FactorOptions& opts = {}) {
  std::vector<u128> ps;
  for (u128 m : s.mu())
    for (u128 p : prime_set(m, opts)) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

/// Vertices: primes of the spectrum. Edge {p, q} iff p*q is an element order.
inline PrimeGraph prime_graph(const Spectrum& s, const FactorOptions& opts = {}) {
  PrimeGraph g;
  g.vertices = spectrum_primes(s, opts);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const auto pq = checked_mul(g.vertices[i], g.vertices[j]);
      if (pq && s.contains(*pq)) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
    }
  return g;
}

struct Coclique {
  std::size_t size = 0;
  std::vector<u128> witness;  // ascending
};

namespace detail {

class CocliqueSearch {
 public:
  explicit CocliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::uint64_t run() {
    const std::size_t n = adj_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    best_size_ = 0;
    best_ = 0;
    extend(0, 0, all);
    return best_;
  }

 private:
  // Include-first DFS over ascending vertices visits independent sets in
  // lexicographic order, so the first set reaching the maximum size is the
  // lexicographically least maximum coclique.
  void extend(std::uint64_t chosen, int chosen_size, std::uint64_t candidates) {
    if (chosen_size > best_size_) {
      best_size_ = chosen_size;
      best_ = chosen;
    }
    while (candidates != 0) {
      if (chosen_size + std::popcount(candidates) <= best_size_) return;
      const int v = std::countr_zero(candidates);
      const std::uint64_t bit = std::uint64_t{1} << v;
      candidates &= ~bit;
      extend(chosen | bit, chosen_size + 1, candidates & ~adj_[static_cast<std::size_t>(v)]);
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_size_ = 0;
  std::uint64_t best_ = 0;
};

}  // namespace detail

/// Exact maximum independent set (t) with its lexicographically least witness.
inline Coclique max_coclique(const PrimeGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n > 64) throw RangeError("max_coclique: more than 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  auto index = [&](u128 p) {
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) - g.vertices.begin());
  };
  for (const auto& [p, q] : g.edges) {
    const std::size_t i = index(p), j = index(q);
    if (i >= n || j >= n || g.vertices[i] != p || g.vertices[j] != q || i == j)
      throw InvalidInput("max_coclique: edge endpoint is not a vertex");
    adj[i] |= std::uint64_t{1} << j;
    adj[j] |= std::uint64_t{1} << i;
  }
  const std::uint64_t best = detail::CocliqueSearch(std::move(adj)).run();
  Coclique c;
  for (std::size_t i = 0; i < n; ++i)
    if ((best >> i) & 1) c.witness.push_back(g.vertices[i]);
  c.size = c.witness.size();
  return c;
}

/// Largest number of distinct primes dividing a single element order.
inline std::size_t alpha_invariant(const Spectrum& s, const FactorOptions& opts = {}) {
  std::size_t a = 0;
  for (u128 m : s.mu()) a = std::max(a, prime_set(m, opts).size());
  return a;
}

/// |pi| <= a(a+3)/2 with a the alpha invariant; holds for every solvable group.
inline bool higman_bound_holds(const Spectrum& s, const FactorOptions& opts = {}) {
  const std::size_t a = alpha_invariant(s, opts);
  return spectrum_primes(s, opts).size() <= a * (a + 3) / 2;
}

/// Four primes whose pairwise products are element orders while no triple product is.
struct CriterionWitness {
  std::array<u128, 4> sigma;
  friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

namespace detail {
inline bool contains_product(const Spectrum& s, std::initializer_list<u128> ps) {
  u128 prod = 1;
  for (u128 p : ps) {
    const auto next = checked_mul(prod, p);
    if (!next) return false;  // larger than any stored order
    prod = *next;
  }
  return s.contains(prod);
}
}  // namespace detail

/// Lexicographically least 4-subset of the spectrum's primes with all six
/// pairwise products in the spectrum and none of the four triple products.
/// A witness certifies that every group with this spectrum is nonsolvable.
inline std::optional<CriterionWitness> nonsolvability_criterion(const Spectrum& s, const FactorOptions& opts = {}) {
  const PrimeGraph g = prime_graph(s, opts);
  const auto& v = g.vertices;
  const std::size_t n = v.size();
  auto adj = [&](std::size_t i, std::size_t j) { return g.adjacent(v[i], v[j]); };
  auto no_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    return !detail::contains_product(s, {v[i], v[j], v[k]});
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adj(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adj(a, c) || !adj(b, c) || !no_triple(a, b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (!adj(a, d) || !adj(b, d) || !adj(c, d)) continue;
          if (no_triple(a, b, d) && no_triple(a, c, d) && no_triple(b, c, d))
            return CriterionWitness{{v[a], v[b], v[c], v[d]}};
        }
      }
    }
  return std::nullopt;
}

/// No witness prime divides another witness prime minus one.
inline bool gm_condition(const CriterionWitness& w) {
  for (u128 p : w.sigma)
    for (u128 q : w.sigma)
      if (p != q && (q - 1) % p == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Serialization

inline std::string join(std::span<const u128> values, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

inline std::string to_csv(const Spectrum& s) { return join(s.mu()); }

/// Parses "a,b,c" (decimal, no spaces) and normalizes it.
inline Spectrum spectrum_from_csv(std::string_view text) {
  std::vector<u128> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_u128(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Spectrum::normalize(values);
}

/// Integers up to 2^64-1 become JSON numbers, larger ones decimal strings.
inline nlohmann::json to_json_value(u128 v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

inline u128 u128_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<u128>(j.get<std::int64_t>());
  if (j.is_string()) return parse_u128(j.get<std::string>());
  throw InvalidInput("expected a non-negative integer, got " + j.dump());
}

inline nlohmann::json to_json(std::span<const u128> values) {
  nlohmann::json arr = nlohmann::json::array();
  for (u128 v : values) arr.push_back(to_json_value(v));
  return arr;
}

inline nlohmann::json to_json(const Spectrum& s) { return to_json(s.mu()); }

inline Spectrum spectrum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("spectrum JSON must be an array");
  std::vector<u128> values;
  for (const auto& e : j) values.push_back(u128_from_json(e));
  return Spectrum::normalize(values);
}

inline nlohmann::json to_json(const PrimeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [p, q] : g.edges) edges.push_back({to_json_value(p), to_json_value(q)});
  return {{"vertices", to_json(g.vertices)}, {"edges", edges}};
}

/// DOT rendering: `graph GK { 2; 5; 2 -- 5; }` with primes as node names.
inline std::string to_dot(const PrimeGraph& g) {
  std::ostringstream out;
  out << "graph GK {\n";
  for (u128 p : g.vertices) out << "  " << to_string(p) << ";\n";
  for (const auto& [p, q] : g.edges) out << "  " << to_string(p) << " -- " << to_string(q) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gkspec
