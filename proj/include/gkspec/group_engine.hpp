#pragma once

// Concrete group representations and the generic algorithms run over them:
// breadth-first closure, element orders and derived series.
//
// A representation supplies an `element` type, a `hasher`, identity(),
// multiply(a, b) (apply a, then b), inverse(a) and generators(). Dense
// representations additionally number their elements 0..index_bound()-1,
// which lets subsets use a flat bitmap instead of a hash set.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gkspec/errors.hpp"
#include "gkspec/gf2m.hpp"
#include "gkspec/group_spec.hpp"
#include "gkspec/int128.hpp"

namespace gkspec {

/// Default enumeration cap: 2^21 elements.
inline constexpr std::size_t kDefaultCap = std::size_t{1} << 21;

template <class R>
concept GroupRep = requires(const R& r, const typename R::element& a) {
  typename R::element;
  typename R::hasher;
  { r.identity() } -> std::convertible_to<typename R::element>;
  { r.multiply(a, a) } -> std::convertible_to<typename R::element>;
  { r.inverse(a) } -> std::convertible_to<typename R::element>;
  { r.generators() } -> std::convertible_to<const std::vector<typename R::element>&>;
};

template <class R>
concept DenseRep = GroupRep<R> && requires(const R& r, const typename R::element& a) {
  { r.index(a) } -> std::convertible_to<std::size_t>;
  { r.index_bound() } -> std::convertible_to<u128>;
};

// ---------------------------------------------------------------------------
// Representations

/// Cyclic groups, metacyclic Frobenius groups and direct products of them,
/// with elements numbered in mixed radix (one digit per factor).
class IndexedRep {
 public:
  using element = std::uint64_t;
  using hasher = std::hash<std::uint64_t>;

  /// True when `spec` is built only from cyclic and Frobenius groups.
  static bool accepts(const GroupSpec& spec) {
    if (std::holds_alternative<CyclicSpec>(spec.kind) || std::holds_alternative<FrobeniusSpec>(spec.kind))
      return true;
    if (const auto* p = std::get_if<ProductSpec>(&spec.kind))
      return std::all_of(p->factors.begin(), p->factors.end(), [](const GroupSpec& f) { return accepts(f); });
    return false;
  }

  explicit IndexedRep(const GroupSpec& spec) {
    if (!accepts(spec)) throw InvalidInput("indexed representation needs cyclic/Frobenius factors only");
    flatten(spec);
    u128 stride = 1;
    for (Factor& f : factors_) {
      f.stride = static_cast<std::uint64_t>(stride);
      stride *= f.size;
      if (stride > (u128{1} << 62)) throw RangeError("group order too large for indexed representation");
    }
    order_ = stride;
    for (const Factor& f : factors_) {
      if (f.kind == Factor::Kind::Cyclic) {
        if (f.size > 1) gens_.push_back(f.stride);
      } else {
        gens_.push_back(f.k * f.stride);  // translation x -> x + 1
        gens_.push_back(f.stride);        // multiplication x -> t x
      }
    }
  }

  element identity() const { return 0; }
  const std::vector<element>& generators() const { return gens_; }
  std::size_t index(element a) const { return static_cast<std::size_t>(a); }
  u128 index_bound() const { return order_; }
  u128 order() const { return order_; }

  element multiply(element a, element b) const {
    element out = 0;
    for (const Factor& f : factors_) {
      const std::uint64_t da = (a / f.stride) % f.size, db = (b / f.stride) % f.size;
      out += f.combine(da, db) * f.stride;
    }
    return out;
  }

  element inverse(element a) const {
    element out = 0;
    for (const Factor& f : factors_) out += f.invert((a / f.stride) % f.size) * f.stride;
    return out;
  }

  /// Closed-form order: lcm over factors. A Frobenius element outside the
  /// kernel has the order of its image in the complement.
  std::uint64_t order_of(element a, std::uint64_t /*cap*/) const {
    u128 o = 1;
    for (const Factor& f : factors_) o = lcm(o, f.order_of((a / f.stride) % f.size));
    return static_cast<std::uint64_t>(o);
  }

 private:
  struct Factor {
    enum class Kind { Cyclic, Affine } kind;
    std::uint64_t size;    // n for cyclic, m*k for affine
    std::uint64_t m = 0;   // affine: kernel order
    std::uint64_t k = 0;   // affine: complement order
    std::vector<std::uint64_t> tpow;  // affine: t^j mod m
    std::uint64_t stride = 1;

    // Affine digit d encodes x -> t^j x + b with b = d / k, j = d % k.
    std::uint64_t combine(std::uint64_t x, std::uint64_t y) const {
      if (kind == Kind::Cyclic) return (x + y) % size;
      const std::uint64_t b1 = x / k, j1 = x % k, b2 = y / k, j2 = y % k;
      const auto b = static_cast<std::uint64_t>((u128{tpow[j2]} * b1 + b2) % m);
      return b * k + (j1 + j2) % k;
    }

    std::uint64_t invert(std::uint64_t x) const {
      if (kind == Kind::Cyclic) return (size - x) % size;
      const std::uint64_t b = x / k, j = x % k;
      const std::uint64_t jinv = (k - j) % k;
      return ((m - static_cast<std::uint64_t>(u128{tpow[jinv]} * b % m)) % m) * k + jinv;
    }

    std::uint64_t order_of(std::uint64_t x) const {
      if (kind == Kind::Cyclic) return size / std::gcd(x, size);
      const std::uint64_t b = x / k, j = x % k;
      if (j == 0) return m / std::gcd(b, m);
      return k / std::gcd(j, k);
    }
  };

  void flatten(const GroupSpec& spec) {
    if (const auto* c = std::get_if<CyclicSpec>(&spec.kind)) {
      factors_.push_back({Factor::Kind::Cyclic, c->n, 0, 0, {}});
    } else if (const auto* fr = std::get_if<FrobeniusSpec>(&spec.kind)) {
      Factor f{Factor::Kind::Affine, fr->m * fr->k, fr->m, fr->k, {}};
      std::uint64_t p = 1;
      for (std::uint64_t j = 0; j < fr->k; ++j) {
        f.tpow.push_back(p);
        p = static_cast<std::uint64_t>(u128{p} * fr->t % fr->m);
      }
      factors_.push_back(std::move(f));
    } else {
      for (const GroupSpec& g : std::get<ProductSpec>(spec.kind).factors) flatten(g);
    }
  }

  std::vector<Factor> factors_;
  std::vector<element> gens_;
  u128 order_ = 1;
};

/// Permutation groups; products act on the disjoint union of the factors' points.
class PermRep {
 public:
  using element = std::vector<std::uint32_t>;

  struct hasher {
    std::size_t operator()(const element& p) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (std::uint32_t x : p) {
        h ^= x;
        h *= 0x100000001b3ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  /// True when every leaf of `spec` is a permutation, cyclic or Frobenius group.
  static bool accepts(const GroupSpec& spec) {
    if (std::holds_alternative<MatSpec>(spec.kind)) return false;
    if (const auto* p = std::get_if<ProductSpec>(&spec.kind))
      return std::all_of(p->factors.begin(), p->factors.end(), [](const GroupSpec& f) { return accepts(f); });
    return true;
  }

  explicit PermRep(const GroupSpec& spec) {
    if (!accepts(spec)) throw InvalidInput("permutation representation cannot hold matrix factors");
    std::vector<element> local;
    degree_ = 0;
    collect(spec, local);
    for (element& g : local) {
      g.resize(degree_, kUnset);
      for (std::uint32_t i = 0; i < degree_; ++i)
        if (g[i] == kUnset) g[i] = i;
    }
    gens_ = std::move(local);
  }

  std::uint32_t degree() const { return degree_; }

  element identity() const {
    element e(degree_);
    std::iota(e.begin(), e.end(), 0u);
    return e;
  }

  const std::vector<element>& generators() const { return gens_; }

  element multiply(const element& a, const element& b) const {
    element c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[i] = b[a[i]];
    return c;
  }

  element inverse(const element& a) const {
    element c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[a[i]] = i;
    return c;
  }

  /// lcm of cycle lengths.
  std::uint64_t order_of(const element& a, std::uint64_t /*cap*/) const {
    std::vector<bool> seen(degree_, false);
    u128 o = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = a[j]) {
        seen[j] = true;
        ++len;
      }
      o = lcm(o, len);
    }
    if (o > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("permutation order exceeds 64 bits");
    return static_cast<std::uint64_t>(o);
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  // Appends generators acting on points [degree_, degree_ + n) and advances degree_.
  void collect(const GroupSpec& spec, std::vector<element>& out) {
    const std::uint32_t base = degree_;
    auto fresh = [&](std::uint32_t n) {
      element g(base + n, kUnset);
      return g;
    };
    if (const auto* c = std::get_if<CyclicSpec>(&spec.kind)) {
      if (c->n > (1u << 24)) throw RangeError("cyclic group too large for permutation representation");
      const auto n = static_cast<std::uint32_t>(c->n);
      if (n > 1) {
        element g = fresh(n);
        for (std::uint32_t i = 0; i < n; ++i) g[base + i] = base + (i + 1) % n;
        out.push_back(std::move(g));
      }
      degree_ += n;
    } else if (const auto* f = std::get_if<FrobeniusSpec>(&spec.kind)) {
      if (f->m > (1u << 24)) throw RangeError("Frobenius kernel too large for permutation representation");
      const auto m = static_cast<std::uint32_t>(f->m);
      element shift = fresh(m), scale = fresh(m);
      for (std::uint32_t i = 0; i < m; ++i) {
        shift[base + i] = base + (i + 1) % m;
        scale[base + i] = base + static_cast<std::uint32_t>(std::uint64_t{i} * f->t % m);
      }
      out.push_back(std::move(shift));
      out.push_back(std::move(scale));
      degree_ += m;
    } else if (const auto* p = std::get_if<PermSpec>(&spec.kind)) {
      for (const Perm& g : p->gens) {
        element h = fresh(p->degree);
        for (std::uint32_t i = 0; i < p->degree; ++i) h[base + i] = base + g.image[i];
        out.push_back(std::move(h));
      }
      degree_ += p->degree;
    } else {
      for (const GroupSpec& g : std::get<ProductSpec>(spec.kind).factors) collect(g, out);
    }
  }

  std::uint32_t degree_ = 0;
  std::vector<element> gens_;
};

/// Subgroups of GL_4(2^alpha).
class MatRep {
 public:
  using element = Mat4;

  struct hasher {
    std::size_t operator()(const Mat4& m) const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ull;
      for (FieldElem x : m.e) {
        h ^= x.bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

  static bool accepts(const GroupSpec& spec) { return std::holds_alternative<MatSpec>(spec.kind); }

  explicit MatRep(const GroupSpec& spec) : field_(std::get<MatSpec>(spec.kind).field) {
    gens_ = std::get<MatSpec>(spec.kind).gens;
    for (const Mat4& g : gens_) (void)inverse(g);  // rejects singular generators
  }

  const FieldCtx& field() const { return field_; }
  element identity() const { return Mat4::identity(); }
  const std::vector<element>& generators() const { return gens_; }

  element multiply(const Mat4& a, const Mat4& b) const {
    Mat4 c;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::uint64_t acc = 0;
        for (int k = 0; k < 4; ++k) acc ^= field_.mul(a.at(i, k), b.at(k, j)).bits;
        c.at(i, j) = {acc};
      }
    return c;
  }

  /// Gauss-Jordan inverse; throws InvalidInput on a singular matrix.
  element inverse(const Mat4& a) const {
    Mat4 m = a, inv = Mat4::identity();
    for (int col = 0; col < 4; ++col) {
      int pivot = col;
      while (pivot < 4 && m.at(pivot, col).is_zero()) ++pivot;
      if (pivot == 4) throw InvalidInput("matrix generator is not invertible");
      for (int j = 0; j < 4; ++j) {
        std::swap(m.at(col, j), m.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
      const FieldElem s = field_.inv(m.at(col, col));
      for (int j = 0; j < 4; ++j) {
        m.at(col, j) = field_.mul(m.at(col, j), s);
        inv.at(col, j) = field_.mul(inv.at(col, j), s);
      }
      for (int r = 0; r < 4; ++r) {
        if (r == col || m.at(r, col).is_zero()) continue;
        const FieldElem f = m.at(r, col);
        for (int j = 0; j < 4; ++j) {
          m.at(r, j) = field_.add(m.at(r, j), field_.mul(f, m.at(col, j)));
          inv.at(r, j) = field_.add(inv.at(r, j), field_.mul(f, inv.at(col, j)));
        }
      }
    }
    return inv;
  }

 private:
  FieldCtx field_;
  std::vector<element> gens_;
};

// ---------------------------------------------------------------------------
// Element sets

namespace detail {

template <GroupRep R>
class Membership {
 public:
  using element = typename R::element;

  Membership(const R& rep, std::size_t cap) {
    if constexpr (DenseRep<R>) {
      const u128 bound = rep.index_bound();
      if (bound <= u128{std::max<std::size_t>(cap, 1)} * 4) {
        dense_.assign(static_cast<std::size_t>(bound), 0);
        use_dense_ = true;
      }
    }
    (void)rep;
    (void)cap;
  }

  bool contains(const R& rep, const element& x) const {
    if constexpr (DenseRep<R>) {
      if (use_dense_) return dense_[rep.index(x)] != 0;
    }
    (void)rep;
    return sparse_.count(x) != 0;
  }

  /// Returns true when x was not present.
  bool insert(const R& rep, const element& x) {
    if constexpr (DenseRep<R>) {
      if (use_dense_) {
        char& slot = dense_[rep.index(x)];
        if (slot) return false;
        slot = 1;
        return true;
      }
    }
    (void)rep;
    return sparse_.insert(x).second;
  }

 private:
  bool use_dense_ = false;
  std::vector<char> dense_;
  std::unordered_set<element, typename R::hasher> sparse_;
};

}  // namespace detail

/// A subgroup given by generators, fully enumerated by breadth-first closure.
template <GroupRep R>
class ElementSet {
 public:
  using element = typename R::element;

  /// The trivial subgroup.
  ElementSet(std::shared_ptr<const R> rep, std::size_t cap)
      : rep_(std::move(rep)), cap_(cap), member_(*rep_, cap) {
    const element e = rep_->identity();
    member_.insert(*rep_, e);
    elems_.push_back(e);
  }

  const R& rep() const { return *rep_; }
  std::shared_ptr<const R> rep_ptr() const { return rep_; }
  const std::vector<element>& elements() const { return elems_; }
  const std::vector<element>& generators() const { return gens_; }
  std::size_t order() const { return elems_.size(); }
  std::size_t cap() const { return cap_; }
  bool contains(const element& x) const { return member_.contains(*rep_, x); }

  /// Replaces this subgroup by <this, g>. Throws CapExceeded past the cap.
  void adjoin(const element& g) {
    if (contains(g)) return;
    gens_.push_back(g);
    const std::size_t old = elems_.size();
    for (std::size_t i = 0; i < old; ++i) push(rep_->multiply(elems_[i], g));
    for (std::size_t i = old; i < elems_.size(); ++i)
      for (const element& h : gens_) push(rep_->multiply(elems_[i], h));
  }

 private:
  void push(element&& x) {
    if (!member_.insert(*rep_, x)) return;
    if (elems_.size() >= cap_)
      throw CapExceeded("enumeration exceeded the cap of " + std::to_string(cap_) + " elements", elems_.size());
    elems_.push_back(std::move(x));
  }

  std::shared_ptr<const R> rep_;
  std::size_t cap_;
  detail::Membership<R> member_;
  std::vector<element> elems_;
  std::vector<element> gens_;
};

/// Closure of `gens` inside the representation.
template <GroupRep R>
ElementSet<R> closure(std::shared_ptr<const R> rep, const std::vector<typename R::element>& gens,
                      std::size_t cap = kDefaultCap) {
  if (cap < 1) throw InvalidInput("enumeration cap must be >= 1");
  ElementSet<R> s(std::move(rep), cap);
  for (const auto& g : gens) s.adjoin(g);
  return s;
}

/// The whole group generated by the representation's generators.
template <GroupRep R>
ElementSet<R> enumerate(std::shared_ptr<const R> rep, std::size_t cap = kDefaultCap) {
  const auto& gens = rep->generators();
  return closure(rep, gens, cap);
}

/// Least d >= 1 with g^d = 1 by repeated multiplication; the reference
/// definition that closed forms are tested against.
template <GroupRep R>
std::uint64_t order_by_powering(const R& rep, const typename R::element& g, std::uint64_t cap) {
  const auto id = rep.identity();
  auto x = g;
  std::uint64_t d = 1;
  while (!(x == id)) {
    if (d >= cap) throw CapExceeded("element order exceeds cap " + std::to_string(cap), d);
    x = rep.multiply(x, g);
    ++d;
  }
  return d;
}

template <GroupRep R>
std::uint64_t element_order(const R& rep, const typename R::element& g, std::uint64_t cap) {
  if constexpr (requires { rep.order_of(g, cap); }) {
    return rep.order_of(g, cap);
  } else {
    return order_by_powering(rep, g, cap);
  }
}

template <GroupRep R>
typename R::element commutator(const R& rep, const typename R::element& a, const typename R::element& b) {
  return rep.multiply(rep.multiply(rep.inverse(a), rep.inverse(b)), rep.multiply(a, b));
}

/// [H, H] for H = <hgens>: the normal closure in H of the commutators of
/// H's generators. H itself need not be enumerated.
template <GroupRep R>
ElementSet<R> derived_subgroup(std::shared_ptr<const R> rep_ptr, const std::vector<typename R::element>& hgens,
                               std::size_t cap) {
  const R& rep = *rep_ptr;
  ElementSet<R> n(rep_ptr, cap);
  for (std::size_t i = 0; i < hgens.size(); ++i)
    for (std::size_t j = i + 1; j < hgens.size(); ++j) n.adjoin(commutator(rep, hgens[i], hgens[j]));
  std::vector<typename R::element> hinv;
  for (const auto& x : hgens) hinv.push_back(rep.inverse(x));
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    const auto g = n.generators()[i];
    for (std::size_t j = 0; j < hgens.size(); ++j) n.adjoin(rep.multiply(rep.multiply(hinv[j], g), hgens[j]));
  }
  return n;
}

template <GroupRep R>
ElementSet<R> derived_subgroup(const ElementSet<R>& h) {
  return derived_subgroup(h.rep_ptr(), h.generators(), h.cap());
}

/// [H, H] as the closure of all commutators of all element pairs.
template <GroupRep R>
ElementSet<R> derived_subgroup_naive(const ElementSet<R>& h) {
  ElementSet<R> n(h.rep_ptr(), h.cap());
  for (const auto& a : h.elements())
    for (const auto& b : h.elements()) n.adjoin(commutator(h.rep(), a, b));
  return n;
}

/// Orders of G, G', G'', ... until the series stabilizes.
template <GroupRep R>
std::vector<std::size_t> derived_series_orders(const ElementSet<R>& g) {
  std::vector<std::size_t> orders{g.order()};
  ElementSet<R> current = g;
  while (current.order() > 1) {
    ElementSet<R> next = derived_subgroup(current);
    if (next.order() == current.order()) break;
    orders.push_back(next.order());
    current = std::move(next);
  }
  return orders;
}

/// Solvable iff the derived series reaches the trivial group.
template <GroupRep R>
bool is_solvable(const ElementSet<R>& g) {
  return derived_series_orders(g).back() == 1;
}

}  // namespace gkspec
