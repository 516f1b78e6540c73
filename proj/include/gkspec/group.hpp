#pragma once

// GroupSpec-level entry points: pick a representation, enumerate, and
// derive spectra and solvability.

#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "gkspec/group_engine.hpp"
#include "gkspec/group_spec.hpp"
#include "gkspec/spectrum.hpp"

namespace gkspec {

/// A fully enumerated group, whatever representation it ended up in.
class EnumeratedGroup {
 public:
  using Sets = std::variant<ElementSet<IndexedRep>, ElementSet<PermRep>, ElementSet<MatRep>>;

  explicit EnumeratedGroup(Sets sets) : sets_(std::move(sets)) {}

  const Sets& sets() const { return sets_; }

  std::size_t order() const {
    return std::visit([](const auto& s) { return s.order(); }, sets_);
  }

  /// Order of every element, in enumeration order.
  std::vector<std::uint64_t> element_orders() const {
    return std::visit(
        [](const auto& s) {
          std::vector<std::uint64_t> out;
          out.reserve(s.order());
          for (const auto& g : s.elements()) out.push_back(element_order(s.rep(), g, s.order()));
          return out;
        },
        sets_);
  }

  Spectrum spectrum() const {
    const auto orders = element_orders();
    std::set<std::uint64_t> distinct(orders.begin(), orders.end());
    std::vector<u128> values(distinct.begin(), distinct.end());
    return Spectrum::normalize(values);
  }

  std::vector<std::size_t> derived_series_orders() const {
    return std::visit([](const auto& s) { return gkspec::derived_series_orders(s); }, sets_);
  }

  bool is_solvable() const { return derived_series_orders().back() == 1; }

 private:
  Sets sets_;
};

/// Calls f with a shared_ptr to the representation chosen for `spec`:
/// indexed for cyclic/Frobenius products, matrices for mat2m, permutations otherwise.
template <class F>
decltype(auto) with_representation(const GroupSpec& spec, F&& f) {
  if (IndexedRep::accepts(spec)) return f(std::make_shared<const IndexedRep>(spec));
  if (MatRep::accepts(spec)) return f(std::make_shared<const MatRep>(spec));
  if (PermRep::accepts(spec)) return f(std::make_shared<const PermRep>(spec));
  throw InvalidInput("enumerating direct products with matrix factors is not supported: " + spec.describe());
}

inline EnumeratedGroup enumerate(const GroupSpec& spec, std::size_t cap = kDefaultCap) {
  return with_representation(spec, [cap](auto rep) { return EnumeratedGroup(EnumeratedGroup::Sets(enumerate(rep, cap))); });
}

inline bool is_solvable(const EnumeratedGroup& g) { return g.is_solvable(); }

/// Solvability by derived series. Cyclic/Frobenius products start from the
/// generators (their order is known), so the group itself is never enumerated.
inline bool is_solvable(const GroupSpec& spec, std::size_t cap = kDefaultCap) {
  if (IndexedRep::accepts(spec)) {
    auto rep = std::make_shared<const IndexedRep>(spec);
    if (rep->order() == 1) return true;
    ElementSet<IndexedRep> n = derived_subgroup(rep, rep->generators(), cap);
    if (n.order() == rep->order()) return false;
    return is_solvable(n);
  }
  return enumerate(spec, cap).is_solvable();
}

/// Spectrum of the group. Direct products combine factor spectra with
/// lcm_product instead of enumerating the product.
inline Spectrum spectrum_of(const GroupSpec& spec, std::size_t cap = kDefaultCap) {
  if (const auto* p = std::get_if<ProductSpec>(&spec.kind)) {
    Spectrum s;
    for (const GroupSpec& f : p->factors) s = lcm_product(s, spectrum_of(f, cap));
    return s;
  }
  return enumerate(spec, cap).spectrum();
}

/// Group order from its GroupSpec without enumeration where possible.
inline u128 group_order(const GroupSpec& spec, std::size_t cap = kDefaultCap) {
  if (const auto* c = std::get_if<CyclicSpec>(&spec.kind)) return c->n;
  if (const auto* f = std::get_if<FrobeniusSpec>(&spec.kind)) return u128{f->m} * f->k;
  if (const auto* p = std::get_if<ProductSpec>(&spec.kind)) {
    u128 o = 1;
    for (const GroupSpec& g : p->factors) {
      const auto next = checked_mul(o, group_order(g, cap));
      if (!next) throw OverflowError("group order overflows 128 bits");
      o = *next;
    }
    return o;
  }
  return enumerate(spec, cap).order();
}

}  // namespace gkspec
