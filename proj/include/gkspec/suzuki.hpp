#pragma once

// Closed-form data for Suzuki groups Sz(q), q = 2^alpha with alpha odd:
// orders, spectra, spectra of automorphism cosets, of Sz(q) x Sz(q) and of
// its extensions by diagonal field automorphisms, and the resulting count of
// groups isospectral to Sz(q) x Sz(q).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "gkspec/errors.hpp"
#include "gkspec/int128.hpp"
#include "gkspec/numth.hpp"
#include "gkspec/spectrum.hpp"

namespace gkspec {

using u256 = boost::multiprecision::uint256_t;

inline constexpr unsigned kMaxSuzukiAlpha = 45;

struct SuzukiParams {
  unsigned alpha;
  u128 q;   // 2^alpha
  u128 s;   // 2^((alpha+1)/2) = sqrt(2q)
  u128 m1;  // 4
  u128 m2;  // q - 1
  u128 m3;  // q - s + 1
  u128 m4;  // q + s + 1
  u256 order;  // q^2 (q-1) (q^2+1); exceeds 128 bits for large alpha

  std::vector<u128> m() const { return {m1, m2, m3, m4}; }
};

namespace detail {
inline void check_alpha(unsigned alpha) {
  if (alpha % 2 == 0) throw InvalidInput("Suzuki groups need odd alpha, got " + std::to_string(alpha));
  if (alpha < 1 || alpha > kMaxSuzukiAlpha) throw RangeError("alpha must lie in [1, 45]");
}
inline u256 widen(u128 v) {
  return (u256(static_cast<std::uint64_t>(v >> 64)) << 64) | u256(static_cast<std::uint64_t>(v));
}
}  // namespace detail

inline SuzukiParams params(unsigned alpha) {
  detail::check_alpha(alpha);
  SuzukiParams p;
  p.alpha = alpha;
  p.q = u128{1} << alpha;
  p.s = u128{1} << ((alpha + 1) / 2);
  p.m1 = 4;
  p.m2 = p.q - 1;
  p.m3 = p.q - p.s + 1;
  p.m4 = p.q + p.s + 1;
  const u256 q = detail::widen(p.q);
  p.order = q * q * (q - 1) * (q * q + 1);
  return p;
}

/// mu(Sz(2^alpha)) = {4, q-1, q-s+1, q+s+1}; [4, 5] for alpha = 1.
inline Spectrum mu_sz(unsigned alpha) {
  const SuzukiParams p = params(alpha);
  return Spectrum::normalize({p.m1, p.m2, p.m3, p.m4});
}

/// Maximal orders in the coset of a field automorphism of order gamma:
/// gamma * omega(Sz(2^(alpha/gamma))).
inline Spectrum aut_coset_spectrum(unsigned alpha, unsigned gamma) {
  detail::check_alpha(alpha);
  if (gamma < 2 || alpha % gamma != 0)
    throw InvalidInput("gamma must be a divisor > 1 of alpha (alpha=" + std::to_string(alpha) +
                       ", gamma=" + std::to_string(gamma) + ")");
  std::vector<u128> scaled;
  const Spectrum base = mu_sz(alpha / gamma);
  for (u128 m : base.mu()) scaled.push_back(m * gamma);
  return Spectrum::normalize(scaled);
}

/// Every element of Aut(Sz(q)) has order < 2q, and outside Sz(q) order < q once q >= 32.
inline bool aut_bounds_check(unsigned alpha) {
  const SuzukiParams p = params(alpha);
  if (alpha < 3) throw RangeError("automorphism bounds are stated for q >= 8 (alpha >= 3)");
  for (unsigned gamma = 2; gamma <= alpha; ++gamma) {
    if (alpha % gamma != 0) continue;
    const Spectrum coset = aut_coset_spectrum(alpha, gamma);
    for (u128 m : coset.mu()) {
      if (m >= 2 * p.q) return false;
      if (p.q >= 32 && m >= p.q) return false;
    }
  }
  const Spectrum mu = mu_sz(alpha);
  for (u128 m : mu.mu())
    if (m >= 2 * p.q) return false;
  return true;
}

/// mu(Sz(q) x Sz(q)): the six products m_i * m_j, i < j.
inline Spectrum square_spectrum(unsigned alpha) {
  if (alpha < 3) throw RangeError("square_spectrum needs alpha >= 3");
  const Spectrum mu = mu_sz(alpha);
  Spectrum sq = lcm_product(mu, mu);
  const auto m = params(alpha).m();
  std::vector<u128> pairwise;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) pairwise.push_back(m[i] * m[j]);
  if (sq != Spectrum::normalize(pairwise))
    throw std::logic_error("square spectrum differs from the pairwise products m_i m_j");
  return sq;
}

struct TwistedSquare {
  Spectrum spectrum;
  bool isospectral;
};

/// Spectrum of (L x L) x| <psi> where psi induces a field automorphism of
/// prime order p on both factors. Orders outside L x L are lcms of two coset
/// orders, each taken from p * omega(Sz(2^(alpha/p))).
inline TwistedSquare twisted_square_spectrum(unsigned alpha, unsigned p) {
  detail::check_alpha(alpha);
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  if (alpha % p != 0) throw InvalidInput(std::to_string(p) + " does not divide alpha=" + std::to_string(alpha));
  const Spectrum square = square_spectrum(alpha);
  const Spectrum coset = aut_coset_spectrum(alpha, p);
  std::vector<u128> orders = square.mu();
  for (u128 a : coset.mu())
    for (u128 b : coset.mu()) orders.push_back(lcm(a, b));
  Spectrum s = Spectrum::normalize(orders);
  const bool iso = isospectral(s, square);
  return {std::move(s), iso};
}

struct OuterClasses {
  std::size_t classes;
  std::vector<unsigned> representatives;  // least l of each class, ascending
};

/// Conjugacy classes of the diagonal subgroups X_l = <(phi^l, phi)>, 1 <= l < p,
/// of C_p x C_p under the swap tau. Each X_l is enumerated as a point set;
/// tau maps it onto some X_m and the orbits of that action are counted.
inline OuterClasses outer_class_count(unsigned p) {
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  auto subgroup = [p](unsigned l) {
    std::vector<std::pair<unsigned, unsigned>> pts;
    for (unsigned i = 0; i < p; ++i) pts.emplace_back((i * l) % p, i);
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  std::vector<std::vector<std::pair<unsigned, unsigned>>> xs(p);
  for (unsigned l = 1; l < p; ++l) xs[l] = subgroup(l);
  auto swap_image = [&](unsigned l) {
    auto pts = xs[l];
    for (auto& [a, b] : pts) std::swap(a, b);
    std::sort(pts.begin(), pts.end());
    for (unsigned m = 1; m < p; ++m)
      if (xs[m] == pts) return m;
    throw std::logic_error("swap does not permute the diagonal subgroups");
  };
  OuterClasses out{0, {}};
  std::vector<bool> seen(p, false);
  for (unsigned l = 1; l < p; ++l) {
    if (seen[l]) continue;
    seen[l] = true;
    seen[swap_image(l)] = true;
    out.representatives.push_back(l);
  }
  out.classes = out.representatives.size();
  return out;
}

inline OuterClasses outer_class_count(unsigned alpha, unsigned p) {
  detail::check_alpha(alpha);
  if (!is_prime(p) || alpha % p != 0)
    throw InvalidInput("p must be a prime divisor of alpha (alpha=" + std::to_string(alpha) +
                       ", p=" + std::to_string(p) + ")");
  return outer_class_count(p);
}

struct IsospectralGroup {
  std::string label;
  Spectrum mu;
};

struct SquareClassification {
  u128 q;
  std::size_t count;
  std::vector<IsospectralGroup> groups;
};

/// Groups isospectral to Sz(q) x Sz(q): the square itself, plus one twisted
/// extension per outer class X_l for every prime p | alpha whose twisted
/// square keeps the spectrum.
inline SquareClassification classify_isospectral_squares(unsigned alpha) {
  detail::check_alpha(alpha);
  if (alpha < 3) throw RangeError("classification needs alpha >= 3");
  const Spectrum square = square_spectrum(alpha);
  SquareClassification c{params(alpha).q, 0, {{"LxL", square}}};
  for (unsigned p = 2; p <= alpha; ++p) {
    if (alpha % p != 0 || !is_prime(p)) continue;
    const TwistedSquare tw = twisted_square_spectrum(alpha, p);
    if (!tw.isospectral) continue;
    for (unsigned l : outer_class_count(alpha, p).representatives)
      c.groups.push_back({"(LxL):<psi>, psi of order " + std::to_string(p) + ", class X" + std::to_string(l),
                          tw.spectrum});
  }
  c.count = c.groups.size();
  return c;
}

/// Short label "X<l>" for twisted groups, "LxL" for the plain square.
inline std::string short_label(const IsospectralGroup& g) {
  const auto pos = g.label.rfind("class ");
  return pos == std::string::npos ? g.label : g.label.substr(pos + 6);
}

inline nlohmann::json to_json(const SquareClassification& c) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : c.groups)
    groups.push_back({{"label", short_label(g)}, {"description", g.label}, {"mu", to_json(g.mu)}});
  return {{"q", to_json_value(c.q)}, {"count", c.count}, {"groups", groups}};
}

}  // namespace gkspec
