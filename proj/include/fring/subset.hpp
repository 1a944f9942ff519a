#pragma once

/**
 * @file subset.hpp
 * @brief Subsets of a finite ring: additive closures, subset products,
 *        ideal/subring classification and enumeration.
 *
 * A product of subsets AB always means the additive subgroup generated by
 * the pairwise products ab, i.e. the set of finite sums a1 b1 + ... + ak bk.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fring/bitmask.hpp"
#include "fring/error.hpp"
#include "fring/ring.hpp"

namespace fring {

inline constexpr std::size_t kDefaultIdealBound = 16;

/// Membership mask over the elements of a parent ring.
class Subset {
 public:
  Subset(FiniteRing parent, Bitmask members) : parent_(std::move(parent)), members_(members) {
    for (std::size_t i = parent_.order(); i < Bitmask::kBits; ++i)
      if (members_.test(i)) throw Error(ErrorCode::kShape, "member index out of range");
  }
  explicit Subset(FiniteRing parent) : parent_(std::move(parent)) {}

  static Subset of(const FiniteRing& parent, std::span<const Elem> elems) {
    Bitmask m;
    for (Elem e : elems) {
      if (e >= parent.order()) throw Error(ErrorCode::kShape, "member index out of range");
      m.set(e);
    }
    return Subset(parent, m);
  }
  static Subset of(const FiniteRing& parent, std::initializer_list<Elem> elems) {
    return of(parent, std::span<const Elem>(elems.begin(), elems.size()));
  }
  static Subset full(const FiniteRing& parent) {
    return Subset(parent, Bitmask::first(parent.order()));
  }
  static Subset zero(const FiniteRing& parent) { return of(parent, {0}); }

  const FiniteRing& parent() const noexcept { return parent_; }
  const Bitmask& mask() const noexcept { return members_; }
  bool contains(Elem e) const noexcept { return members_.test(e); }
  std::size_t size() const noexcept { return members_.count(); }
  bool is_full() const noexcept { return size() == parent_.order(); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    members_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
    return out;
  }

  bool same_parent(const Subset& other) const noexcept { return parent_ == other.parent_; }

  bool is_subset_of(const Subset& other) const {
    require_same_parent(other);
    return members_.is_subset_of(other.members_);
  }

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

  void require_same_parent(const Subset& other) const {
    if (!same_parent(other)) throw Error(ErrorCode::kParentMismatch, "subsets of different rings");
  }

 private:
  FiniteRing parent_;
  Bitmask members_;
};

inline Subset intersection(const Subset& a, const Subset& b) {
  a.require_same_parent(b);
  return Subset(a.parent(), a.mask() & b.mask());
}

namespace detail {

/// Subgroup generated by `start` (assumed a subgroup) and g: the union of
/// cosets start + k g until k g falls back into start.
inline Bitmask extend_subgroup(const FiniteRing& r, const Bitmask& start,
                               const std::vector<Elem>& start_elems, Elem g) {
  Bitmask out = start;
  Elem step = g;
  while (!start.test(step)) {
    for (Elem h : start_elems) out.set(r.add(h, step));
    step = r.add(step, g);
  }
  return out;
}

inline Bitmask closure_of(const FiniteRing& r, const Bitmask& gens) {
  Bitmask h;
  h.set(0);
  std::vector<Elem> elems{0};
  gens.for_each([&](std::size_t g) {
    if (h.test(g)) return;
    h = extend_subgroup(r, h, elems, static_cast<Elem>(g));
    elems.clear();
    h.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
  });
  return h;
}

inline Bitmask products_of(const FiniteRing& r, const Bitmask& a, const Bitmask& b) {
  std::vector<Elem> bs;
  b.for_each([&](std::size_t y) { bs.push_back(static_cast<Elem>(y)); });
  Bitmask out;
  a.for_each([&](std::size_t x) {
    for (Elem y : bs) out.set(r.mul(static_cast<Elem>(x), y));
  });
  return out;
}

inline bool is_subgroup_mask(const FiniteRing& r, const Bitmask& a) {
  if (!a.test(0)) return false;
  bool ok = true;
  std::vector<Elem> elems;
  a.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
  for (Elem x : elems) {
    if (!a.test(r.neg(x))) return false;
    for (Elem y : elems)
      if (!a.test(r.add(x, y))) return false;
  }
  return ok;
}

}  // namespace detail

/// Smallest additive subgroup containing A. Always contains 0.
inline Subset additive_closure(const Subset& a) {
  return Subset(a.parent(), detail::closure_of(a.parent(), a.mask()));
}

/// AB = additive closure of { ab : a in A, b in B }.
inline Subset subset_product(const Subset& a, const Subset& b) {
  a.require_same_parent(b);
  const auto& r = a.parent();
  return Subset(r, detail::closure_of(r, detail::products_of(r, a.mask(), b.mask())));
}

/// (AB)C.
inline Subset subset_product(const Subset& a, const Subset& b, const Subset& c) {
  return subset_product(subset_product(a, b), c);
}

struct SubsetClass {
  bool is_additive_subgroup = false;
  bool is_subring = false;
  bool is_left_ideal = false;
  bool is_right_ideal = false;
  bool is_ideal = false;
};

/// One-sided ideal flags include the subgroup condition, so
/// is_ideal == is_left_ideal && is_right_ideal.
inline SubsetClass classify_subset(const Subset& a) {
  const auto& r = a.parent();
  SubsetClass c;
  c.is_additive_subgroup = detail::is_subgroup_mask(r, a.mask());
  if (!c.is_additive_subgroup) return c;
  const Bitmask all = Bitmask::first(r.order());
  c.is_subring = detail::products_of(r, a.mask(), a.mask()).is_subset_of(a.mask());
  c.is_left_ideal = detail::products_of(r, all, a.mask()).is_subset_of(a.mask());
  c.is_right_ideal = detail::products_of(r, a.mask(), all).is_subset_of(a.mask());
  c.is_ideal = c.is_left_ideal && c.is_right_ideal;
  return c;
}

/// AA = A. Requires A to be a subring.
inline bool is_idempotent(const Subset& a) {
  if (!classify_subset(a).is_subring) throw Error(ErrorCode::kNotSubring, "is_idempotent");
  return subset_product(a, a) == a;
}

inline bool is_idempotent(const FiniteRing& r) { return is_idempotent(Subset::full(r)); }

/// All additive subgroups in ascending mask order.
inline std::vector<Subset> enumerate_subgroups(const FiniteRing& r) {
  std::set<Bitmask> seen;
  std::deque<Bitmask> queue;
  Bitmask zero;
  zero.set(0);
  seen.insert(zero);
  queue.push_back(zero);
  std::vector<Elem> elems;
  while (!queue.empty()) {
    const Bitmask h = queue.front();
    queue.pop_front();
    elems.clear();
    h.for_each([&](std::size_t i) { elems.push_back(static_cast<Elem>(i)); });
    for (std::size_t x = 1; x < r.order(); ++x) {
      if (h.test(x)) continue;
      const Bitmask k = detail::extend_subgroup(r, h, elems, static_cast<Elem>(x));
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<Subset> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.emplace_back(r, m);
  return out;
}

inline std::vector<Subset> enumerate_subrings(const FiniteRing& r) {
  std::vector<Subset> out;
  for (auto& s : enumerate_subgroups(r))
    if (detail::products_of(r, s.mask(), s.mask()).is_subset_of(s.mask())) out.push_back(s);
  return out;
}

/// Two-sided ideals in ascending mask order. Always starts with {0} and ends
/// with the whole ring.
inline std::vector<Subset> enumerate_ideals(const FiniteRing& r,
                                            std::size_t bound = kDefaultIdealBound) {
  if (r.order() > bound)
    throw Error(ErrorCode::kBoundExceeded, "ideal enumeration of order " +
                                               std::to_string(r.order()) + " exceeds bound " +
                                               std::to_string(bound));
  std::vector<Subset> out;
  for (auto& s : enumerate_subgroups(r))
    if (classify_subset(s).is_ideal) out.push_back(s);
  return out;
}

struct InducedRing {
  FiniteRing ring;
  /// embedding[i] is the parent element carried by index i of `ring`.
  std::vector<Elem> embedding;
};

/// The subring A as a ring in its own right. Members keep their relative
/// order, so 0 stays at index 0.
inline InducedRing induced_ring(const Subset& a) {
  if (!classify_subset(a).is_subring) throw Error(ErrorCode::kNotSubring, "induced_ring");
  const auto& r = a.parent();
  auto members = a.elements();
  const std::size_t k = members.size();
  std::vector<Elem> index(r.order(), 0);
  for (std::size_t i = 0; i < k; ++i) index[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> add(k * k), mul(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      add[i * k + j] = index[r.add(members[i], members[j])];
      mul[i * k + j] = index[r.mul(members[i], members[j])];
    }
  return {FiniteRing::from_tables_unchecked(k, std::move(add), std::move(mul)),
          std::move(members)};
}

using ProductWitness = std::vector<std::pair<Elem, Elem>>;

/// Writes r as a1 a1' + ... + ak ak' with all factors in A, or returns nullopt
/// when r is not in AA. Breadth-first over sum length with pairs tried in
/// lexicographic order, so the witness is the shortest and deterministic.
inline std::optional<ProductWitness> decompose_element(const Subset& a, Elem r) {
  const auto& ring = a.parent();
  if (r >= ring.order()) throw Error(ErrorCode::kShape, "element out of range");
  if (r == 0) return ProductWitness{};
  if (!a.contains(r)) return std::nullopt;

  const auto members = a.elements();
  std::vector<std::pair<Elem, Elem>> pairs;  // first pair for each distinct product
  {
    Bitmask seen;
    for (Elem x : members)
      for (Elem y : members) {
        const Elem p = ring.mul(x, y);
        if (p != 0 && !seen.test(p)) {
          seen.set(p);
          pairs.emplace_back(x, y);
        }
      }
  }

  struct Step {
    Elem prev;
    std::pair<Elem, Elem> pair;
  };
  std::unordered_map<Elem, Step> parent;
  Bitmask reached;
  reached.set(0);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem cur = queue.front();
    queue.pop_front();
    for (const auto& pr : pairs) {
      const Elem next = ring.add(cur, ring.mul(pr.first, pr.second));
      if (reached.test(next)) continue;
      reached.set(next);
      parent[next] = {cur, pr};
      if (next == r) {
        ProductWitness w;
        for (Elem x = r; x != 0; x = parent[x].prev) w.push_back(parent[x].pair);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

/// Evaluates a1 a1' + ... + ak ak'.
inline Elem replay_witness(const FiniteRing& r, const ProductWitness& w) {
  Elem acc = 0;
  for (const auto& [x, y] : w) acc = r.add(acc, r.mul(x, y));
  return acc;
}

/// Lexicographically first generating set of the additive group among those
/// of minimum size.
inline std::vector<Elem> minimal_generating_set(const FiniteRing& r) {
  const std::size_t n = r.order();
  if (n == 1) return {};
  const Bitmask all = Bitmask::first(n);
  std::vector<Elem> pick;
  for (std::size_t k = 1; k < n; ++k) {
    // combinations of k nonzero elements in lexicographic order
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      Bitmask g;
      for (auto i : idx) g.set(i);
      if (detail::closure_of(r, g) == all) {
        for (auto i : idx) pick.push_back(static_cast<Elem>(i));
        return pick;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return pick;
}

}  // namespace fring
