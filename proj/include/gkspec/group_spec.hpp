#pragma once

// Symbolic descriptions of finite groups and their JSON file format.

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkspec/errors.hpp"
#include "gkspec/gf2m.hpp"
#include "gkspec/int128.hpp"

namespace gkspec {

/// 4x4 matrix over GF(2^alpha), row-major.
struct Mat4 {
  std::array<FieldElem, 16> e{};

  FieldElem& at(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  FieldElem at(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = {1};
    return m;
  }

  friend bool operator==(const Mat4&, const Mat4&) = default;
};

/// Permutation of {0, ..., degree-1} in image form: point i maps to image[i].
struct Perm {
  std::vector<std::uint32_t> image;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(image.size()); }
  friend bool operator==(const Perm&, const Perm&) = default;
};

struct CyclicSpec {
  std::uint64_t n;
};

/// C_m x| C_k with the complement acting as multiplication by t on Z_m.
struct FrobeniusSpec {
  std::uint64_t m;
  std::uint64_t t;
  std::uint64_t k;
};

struct PermSpec {
  std::uint32_t degree;
  std::vector<Perm> gens;
};

struct MatSpec {
  FieldCtx field;
  std::vector<Mat4> gens;
};

struct GroupSpec;

struct ProductSpec {
  std::vector<GroupSpec> factors;
};

struct GroupSpec {
  std::variant<CyclicSpec, FrobeniusSpec, PermSpec, MatSpec, ProductSpec> kind;

  static GroupSpec cyclic(std::uint64_t n) {
    if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
    return {CyclicSpec{n}};
  }

  /// Requires t^k = 1 (mod m) and gcd(t^j - 1, m) = 1 for 0 < j < k, so that
  /// the action is fixed-point-free and the group is Frobenius of order m*k.
  static GroupSpec frobenius(std::uint64_t m, std::uint64_t t, std::uint64_t k) {
    if (m < 2 || k < 2) throw InvalidInput("frobenius: need m >= 2 and k >= 2");
    if (t < 1 || t >= m || gcd(t, m) != 1) throw InvalidInput("frobenius: t must be a unit modulo m");
    std::uint64_t power = 1;
    for (std::uint64_t j = 1; j < k; ++j) {
      power = static_cast<std::uint64_t>(u128{power} * t % m);
      if (gcd((power + m - 1) % m, m) != 1)
        throw InvalidInput("frobenius(" + std::to_string(m) + "," + std::to_string(t) + "," + std::to_string(k) +
                           "): action has fixed points");
    }
    power = static_cast<std::uint64_t>(u128{power} * t % m);
    if (power != 1) throw InvalidInput("frobenius: t^k is not 1 modulo m");
    return {FrobeniusSpec{m, t, k}};
  }

  static GroupSpec perm(std::uint32_t degree, std::vector<Perm> gens) {
    if (degree < 1) throw InvalidInput("permutation degree must be >= 1");
    for (const Perm& g : gens) {
      if (g.degree() != degree) throw InvalidInput("permutation generator has wrong degree");
      std::vector<bool> seen(degree, false);
      for (std::uint32_t x : g.image) {
        if (x >= degree || seen[x]) throw InvalidInput("permutation generator is not a bijection");
        seen[x] = true;
      }
    }
    return {PermSpec{degree, std::move(gens)}};
  }

  static GroupSpec mat(const FieldCtx& field, std::vector<Mat4> gens) {
    for (const Mat4& g : gens)
      for (FieldElem x : g.e)
        if (x.bits >= field.size()) throw InvalidInput("matrix entry outside the field");
    return {MatSpec{field, std::move(gens)}};
  }

  static GroupSpec product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw InvalidInput("direct product needs at least one factor");
    return {ProductSpec{std::move(factors)}};
  }

  /// Short human-readable name, e.g. "C6", "F(7,2,3)", "F(7,2,3) x F(13,3,3)".
  std::string describe() const {
    return std::visit(
        [](const auto& s) -> std::string {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CyclicSpec>) {
            return "C" + std::to_string(s.n);
          } else if constexpr (std::is_same_v<T, FrobeniusSpec>) {
            return "F(" + std::to_string(s.m) + "," + std::to_string(s.t) + "," + std::to_string(s.k) + ")";
          } else if constexpr (std::is_same_v<T, PermSpec>) {
            return "Perm(" + std::to_string(s.degree) + ";" + std::to_string(s.gens.size()) + " gens)";
          } else if constexpr (std::is_same_v<T, MatSpec>) {
            return "Mat4(GF(2^" + std::to_string(s.field.alpha()) + ");" + std::to_string(s.gens.size()) + " gens)";
          } else {
            std::string out;
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
              if (i != 0) out += " x ";
              out += s.factors[i].describe();
            }
            return out;
          }
        },
        kind);
  }
};

// ---------------------------------------------------------------------------
// Suzuki groups

/// Generators of Sz(2^alpha) inside GL_4(2^alpha): the unitriangular S(1,0),
/// a torus element built from a primitive element, and the antidiagonal
/// involution. alpha must be odd; alpha = 1 gives Sz(2) of order 20.
inline GroupSpec suzuki_generators(const FieldCtx& f) {
  const unsigned alpha = f.alpha();
  if (alpha % 2 == 0) throw InvalidInput("Suzuki groups need odd alpha, got " + std::to_string(alpha));
  const unsigned half = (alpha - 1) / 2;
  const std::uint64_t theta_exp = std::uint64_t{1} << (half + 1);  // x -> x^theta squares to Frobenius
  auto theta = [&](FieldElem x) { return f.pow(x, theta_exp); };

  auto unipotent = [&](FieldElem a, FieldElem b) {
    Mat4 s = Mat4::identity();
    s.at(1, 0) = a;
    s.at(2, 0) = b;
    s.at(2, 1) = theta(a);
    s.at(3, 0) = f.add(f.add(f.pow(a, 2 + theta_exp), f.mul(a, b)), theta(b));
    s.at(3, 1) = f.add(f.pow(a, 1 + theta_exp), b);
    s.at(3, 2) = a;
    return s;
  };

  const FieldElem kappa = f.primitive_element();
  const FieldElem kappa_inv = f.inv(kappa);
  const std::uint64_t e = std::uint64_t{1} << half;
  Mat4 torus;
  torus.at(0, 0) = f.pow(kappa_inv, 1 + e);
  torus.at(1, 1) = f.pow(kappa_inv, e);
  torus.at(2, 2) = f.pow(kappa, e);
  torus.at(3, 3) = f.pow(kappa, 1 + e);

  Mat4 flip;
  for (int i = 0; i < 4; ++i) flip.at(i, 3 - i) = f.one();

  return GroupSpec::mat(f, {unipotent(f.one(), f.zero()), torus, flip});
}

inline GroupSpec suzuki_generators(unsigned alpha) { return suzuki_generators(field_make(alpha)); }

// ---------------------------------------------------------------------------
// JSON group files
//
//   {"kind":"cyclic","n":6}
//   {"kind":"frobenius","m":7,"t":2,"k":3}
//   {"kind":"perm","degree":3,"gens":[[1,2,0]]}                      (0-based images)
//   {"kind":"mat2m","alpha":3,"modulus":"0b1011","gens":[["1","0",...16 hex entries]]}
//   {"kind":"product","factors":[...]}
//
// Hex field elements: bit i of the value is the coefficient of x^i.

namespace detail {

inline std::uint64_t parse_hex_elem(const std::string& s) {
  std::string_view v = s;
  if (v.substr(0, 2) == "0x" || v.substr(0, 2) == "0X") v.remove_prefix(2);
  if (v.empty() || v.size() > 16) throw InvalidInput("bad hex field element: '" + s + "'");
  std::uint64_t out = 0;
  for (char c : v) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw InvalidInput("bad hex field element: '" + s + "'");
    out = (out << 4) | static_cast<std::uint64_t>(d);
  }
  return out;
}

inline std::string hex_elem(FieldElem x) {
  std::ostringstream out;
  out << "0x" << std::hex << x.bits;
  return out.str();
}

inline std::uint64_t json_u64(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw InvalidInput(std::string("group spec: missing or non-integer field '") + key + "'");
  return j.at(key).get<std::uint64_t>();
}

}  // namespace detail

inline GroupSpec group_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InvalidInput("group spec: expected an object with a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return GroupSpec::cyclic(detail::json_u64(j, "n"));
  if (kind == "frobenius")
    return GroupSpec::frobenius(detail::json_u64(j, "m"), detail::json_u64(j, "t"), detail::json_u64(j, "k"));
  if (kind == "perm") {
    const auto degree = detail::json_u64(j, "degree");
    if (degree > (std::uint64_t{1} << 24)) throw RangeError("permutation degree too large");
    std::vector<Perm> gens;
    for (const auto& g : j.at("gens")) gens.push_back(Perm{g.get<std::vector<std::uint32_t>>()});
    return GroupSpec::perm(static_cast<std::uint32_t>(degree), std::move(gens));
  }
  if (kind == "mat2m") {
    const auto alpha = detail::json_u64(j, "alpha");
    if (alpha < 1 || alpha > kMaxFieldDegree) throw RangeError("mat2m: alpha out of range");
    std::optional<std::uint64_t> modulus;
    if (j.contains("modulus")) modulus = gf2poly::from_binary(j.at("modulus").get<std::string>());
    const FieldCtx f = field_make(static_cast<unsigned>(alpha), modulus);
    std::vector<Mat4> gens;
    for (const auto& g : j.at("gens")) {
      if (!g.is_array() || g.size() != 16) throw InvalidInput("mat2m: each generator needs 16 entries");
      Mat4 m;
      for (std::size_t i = 0; i < 16; ++i) m.e[i] = f.elem(detail::parse_hex_elem(g[i].get<std::string>()));
      gens.push_back(m);
    }
    return GroupSpec::mat(f, std::move(gens));
  }
  if (kind == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(group_spec_from_json(f));
    return GroupSpec::product(std::move(factors));
  }
  throw InvalidInput("group spec: unknown kind '" + kind + "'");
}

inline nlohmann::json to_json(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> nlohmann::json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return {{"kind", "cyclic"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, FrobeniusSpec>) {
          return {{"kind", "frobenius"}, {"m", s.m}, {"t", s.t}, {"k", s.k}};
        } else if constexpr (std::is_same_v<T, PermSpec>) {
          nlohmann::json gens = nlohmann::json::array();
          for (const Perm& p : s.gens) gens.push_back(p.image);
          return {{"kind", "perm"}, {"degree", s.degree}, {"gens", gens}};
        } else if constexpr (std::is_same_v<T, MatSpec>) {
          nlohmann::json gens = nlohmann::json::array();
          for (const Mat4& m : s.gens) {
            nlohmann::json entries = nlohmann::json::array();
            for (FieldElem x : m.e) entries.push_back(detail::hex_elem(x));
            gens.push_back(entries);
          }
          return {{"kind", "mat2m"},
                  {"alpha", s.field.alpha()},
                  {"modulus", gf2poly::to_binary(s.field.modulus())},
                  {"gens", gens}};
        } else {
          nlohmann::json factors = nlohmann::json::array();
          for (const GroupSpec& f : s.factors) factors.push_back(to_json(f));
          return {{"kind", "product"}, {"factors", factors}};
        }
      },
      spec.kind);
}

}  // namespace gkspec
