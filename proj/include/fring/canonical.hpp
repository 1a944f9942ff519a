#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fring/ring.hpp"

namespace fring {

inline constexpr std::size_t kDefaultCanonBound = 8;

struct CanonicalForm {
  FiniteRing ring;
  /// Relabeling applied to the input: element x becomes perm[x].
  std::vector<Elem> perm;
};

namespace detail {

/// Depth-first search over relabelings fixing 0. Tables are compared as the
/// addition table followed by the multiplication table, row-major. Row 0 and
/// column 0 are identical under every relabeling and are skipped.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FiniteRing& r)
      : r_(r), n_(r.order()), label_(n_, 0), inv_(n_, kUnset), used_(n_, false) {
    best_.assign(2 * (n_ - 1) * (n_ - 1), 0);
  }

  std::vector<Elem> run() {
    label_[0] = 0;
    inv_[0] = 0;
    used_[0] = true;
    extend(1);
    std::vector<Elem> perm(n_);
    for (std::size_t k = 0; k < n_; ++k) perm[best_label_[k]] = static_cast<Elem>(k);
    return perm;
  }

 private:
  static constexpr Elem kUnset = std::numeric_limits<Elem>::max();

  Elem entry(int table, std::size_t a, std::size_t b) const {
    const Elem x = label_[a], y = label_[b];
    return table == 0 ? r_.add(x, y) : r_.mul(x, y);
  }

  // -1: current strictly smaller, +1: strictly larger (prune), 0: undecided or equal.
  int compare(std::size_t depth) const {
    if (!have_best_) return -1;
    std::size_t pos = 0;
    for (int t = 0; t < 2; ++t)
      for (std::size_t a = 1; a < n_; ++a)
        for (std::size_t b = 1; b < n_; ++b, ++pos) {
          if (a >= depth || b >= depth) return 0;
          const Elem v = inv_[entry(t, a, b)];
          if (v == kUnset) return best_[pos] < depth ? 1 : 0;
          if (v != best_[pos]) return v < best_[pos] ? -1 : 1;
        }
    return 0;
  }

  void record() {
    std::size_t pos = 0;
    for (int t = 0; t < 2; ++t)
      for (std::size_t a = 1; a < n_; ++a)
        for (std::size_t b = 1; b < n_; ++b) best_[pos++] = inv_[entry(t, a, b)];
    best_label_ = label_;
    have_best_ = true;
  }

  void extend(std::size_t depth) {
    if (depth == n_) {
      if (compare(depth) < 0) record();
      return;
    }
    for (std::size_t old = 1; old < n_; ++old) {
      if (used_[old]) continue;
      used_[old] = true;
      label_[depth] = static_cast<Elem>(old);
      inv_[old] = static_cast<Elem>(depth);
      if (compare(depth + 1) <= 0) extend(depth + 1);
      inv_[old] = kUnset;
      used_[old] = false;
    }
  }

  const FiniteRing& r_;
  std::size_t n_;
  std::vector<Elem> label_;  // new -> old
  std::vector<Elem> inv_;    // old -> new
  std::vector<bool> used_;
  std::vector<Elem> best_;
  std::vector<Elem> best_label_;
  bool have_best_ = false;
};

}  // namespace detail

/// Lexicographically least relabeling of r with 0 fixed, by brute force over
/// the (n-1)! relabelings with prefix pruning. Two rings within the bound are
/// isomorphic iff their canonical rings compare equal.
inline CanonicalForm canonical_form(const FiniteRing& r, std::size_t bound = kDefaultCanonBound) {
  if (r.order() > bound)
    throw Error(ErrorCode::kBoundExceeded, "canonical form of order " + std::to_string(r.order()) +
                                               " exceeds bound " + std::to_string(bound));
  if (r.order() == 1) return {r, {0}};
  auto perm = detail::CanonicalSearch(r).run();
  auto ring = relabel(r, perm);
  return {std::move(ring), std::move(perm)};
}

/// 64-bit FNV-1a over the order and both tables.
inline std::uint64_t table_hash(const FiniteRing& r) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 2; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(r.order());
  for (Elem e : r.add_table()) mix(e);
  for (Elem e : r.mul_table()) mix(e);
  return h;
}

}  // namespace fring
