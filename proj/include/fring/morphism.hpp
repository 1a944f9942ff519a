#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fring/canonical.hpp"
#include "fring/error.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring {

inline constexpr std::size_t kDefaultHomBound = 16;
inline constexpr std::size_t kMaxHomGenerators = 4;

/// A ring homomorphism recorded elementwise. Only produced by check_hom (or
/// operations that replay through it), so the hom laws hold for every value.
struct RingHom {
  FiniteRing domain;
  FiniteRing codomain;
  std::vector<Elem> map;
  bool injective = false;
  /// Both rings have units and the unit goes to the unit.
  bool unital = false;

  Elem operator()(Elem x) const { return map.at(x); }
  bool bijective() const { return injective && domain.order() == codomain.order(); }
};

struct HomViolation {
  enum class Kind { kRange, kZero, kAdditive, kMultiplicative };
  Kind kind;
  Elem x = 0;
  Elem y = 0;
};

inline std::string to_string(HomViolation::Kind k) {
  switch (k) {
    case HomViolation::Kind::kRange: return "range";
    case HomViolation::Kind::kZero: return "zero";
    case HomViolation::Kind::kAdditive: return "additive";
    case HomViolation::Kind::kMultiplicative: return "multiplicative";
  }
  return "unknown";
}

struct HomCheck {
  std::optional<RingHom> hom;
  std::optional<HomViolation> violation;

  explicit operator bool() const noexcept { return hom.has_value(); }
};

/// Raised by constructions whose candidate map fails check_hom.
class HomFailure : public Error {
 public:
  HomFailure(const std::string& what, HomViolation v)
      : Error(ErrorCode::kHomFail, what + " (" + to_string(v.kind) + " at " +
                                       std::to_string(v.x) + "," + std::to_string(v.y) + ")"),
        violation_(v) {}
  const HomViolation& violation() const noexcept { return violation_; }

 private:
  HomViolation violation_;
};

/// Exhaustive check of f(x+y) = f(x)+f(y) and f(xy) = f(x)f(y).
inline HomCheck check_hom(std::vector<Elem> f, const FiniteRing& r, const FiniteRing& s) {
  const std::size_t n = r.order();
  if (f.size() != n) throw Error(ErrorCode::kShape, "map is not total on the domain");
  for (std::size_t x = 0; x < n; ++x)
    if (f[x] >= s.order())
      return {std::nullopt, HomViolation{HomViolation::Kind::kRange, static_cast<Elem>(x), 0}};
  if (f[0] != 0) return {std::nullopt, HomViolation{HomViolation::Kind::kZero, 0, 0}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b);
      if (f[r.add(x, y)] != s.add(f[x], f[y]))
        return {std::nullopt, HomViolation{HomViolation::Kind::kAdditive, x, y}};
      if (f[r.mul(x, y)] != s.mul(f[x], f[y]))
        return {std::nullopt, HomViolation{HomViolation::Kind::kMultiplicative, x, y}};
    }
  RingHom h{r, s, std::move(f)};
  std::vector<bool> hit(s.order(), false);
  h.injective = true;
  for (Elem v : h.map) {
    if (hit[v]) h.injective = false;
    hit[v] = true;
  }
  h.unital = r.unit() && s.unit() && h.map[*r.unit()] == *s.unit();
  return {std::move(h), std::nullopt};
}

/// Throwing variant for maps that are expected to be homomorphisms.
inline RingHom require_hom(std::vector<Elem> f, const FiniteRing& r, const FiniteRing& s,
                           const std::string& what) {
  auto c = check_hom(std::move(f), r, s);
  if (!c) throw HomFailure(what, *c.violation);
  return std::move(*c.hom);
}

/// g after f.
inline RingHom compose(const RingHom& g, const RingHom& f) {
  if (!(f.codomain == g.domain)) throw Error(ErrorCode::kShape, "homs do not chain");
  std::vector<Elem> m(f.map.size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g.map[f.map[x]];
  return require_hom(std::move(m), f.domain, g.codomain, "composition");
}

inline RingHom identity_hom(const FiniteRing& r) {
  std::vector<Elem> m(r.order());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = static_cast<Elem>(x);
  return require_hom(std::move(m), r, r, "identity");
}

/// Image of a hom as a subset of the codomain.
inline Subset image(const RingHom& h) {
  Bitmask m;
  for (Elem v : h.map) m.set(v);
  return Subset(h.codomain, m);
}

struct HomConstraint {
  std::vector<std::pair<Elem, Elem>> fixed_points;
  bool require_unital = false;
  bool require_injective = false;
};

namespace detail {

class HomEnumerator {
 public:
  HomEnumerator(const FiniteRing& r, const FiniteRing& s, const HomConstraint& c,
                std::size_t limit)
      : r_(r), s_(s), c_(c), limit_(limit), gens_(minimal_generating_set(r)),
        fixed_(r.order(), kFree) {
    for (auto [x, y] : c.fixed_points) {
      if (x >= r.order() || y >= s.order())
        throw Error(ErrorCode::kShape, "fixed point out of range");
      fixed_[x] = y;
    }
  }

  std::vector<RingHom> run() {
    images_.assign(gens_.size(), 0);
    descend(0);
    return std::move(out_);
  }

  std::size_t generator_count() const { return gens_.size(); }

 private:
  static constexpr int kFree = -1;

  // Extends the assignment on the first k generators additively. Returns
  // false on an inconsistency or a violated partial constraint.
  bool build_partial(std::size_t k, std::vector<int>& f) const {
    const std::size_t n = r_.order();
    f.assign(n, kFree);
    f[0] = 0;
    std::vector<Elem> reached{0};
    for (std::size_t head = 0; head < reached.size(); ++head) {
      const Elem x = reached[head];
      for (std::size_t i = 0; i < k; ++i) {
        const Elem y = r_.add(x, gens_[i]);
        const int fy = s_.add(static_cast<Elem>(f[x]), images_[i]);
        if (f[y] == kFree) {
          f[y] = fy;
          reached.push_back(y);
        } else if (f[y] != fy) {
          return false;
        }
      }
    }
    std::vector<bool> hit(c_.require_injective ? s_.order() : 0, false);
    for (Elem x : reached) {
      if (fixed_[x] != kFree && fixed_[x] != f[x]) return false;
      if (c_.require_injective) {
        if (hit[f[x]]) return false;
        hit[f[x]] = true;
      }
      for (Elem y : reached) {
        const Elem p = r_.mul(x, y);
        if (f[p] != kFree && f[p] != s_.mul(static_cast<Elem>(f[x]), static_cast<Elem>(f[y])))
          return false;
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (out_.size() >= limit_) return;
    std::vector<int> f;
    if (!build_partial(k, f)) return;
    if (k == gens_.size()) {
      std::vector<Elem> map(f.begin(), f.end());
      auto check = check_hom(std::move(map), r_, s_);
      if (!check) return;
      if (c_.require_unital && !check.hom->unital) return;
      if (c_.require_injective && !check.hom->injective) return;
      out_.push_back(std::move(*check.hom));
      return;
    }
    const std::size_t order_g = r_.additive_order(gens_[k]);
    for (std::size_t y = 0; y < s_.order(); ++y) {
      if (order_g % s_.additive_order(static_cast<Elem>(y)) != 0) continue;
      images_[k] = static_cast<Elem>(y);
      descend(k + 1);
      if (out_.size() >= limit_) return;
    }
  }

  const FiniteRing& r_;
  const FiniteRing& s_;
  const HomConstraint& c_;
  std::size_t limit_;
  std::vector<Elem> gens_;
  std::vector<int> fixed_;
  std::vector<Elem> images_;
  std::vector<RingHom> out_;
};

}  // namespace detail

/// All homomorphisms R -> S satisfying c. Images are assigned to a minimal
/// additive generating set of R and extended additively; partial maps that
/// already break additivity, multiplicativity or a constraint are pruned.
/// Results are ordered lexicographically by the generator images.
inline std::vector<RingHom> enumerate_homs(const FiniteRing& r, const FiniteRing& s,
                                           const HomConstraint& c = {},
                                           std::size_t bound = kDefaultHomBound,
                                           std::size_t limit = static_cast<std::size_t>(-1)) {
  if (r.order() > bound)
    throw Error(ErrorCode::kBoundExceeded, "hom enumeration from order " +
                                               std::to_string(r.order()) + " exceeds bound " +
                                               std::to_string(bound));
  detail::HomEnumerator e(r, s, c, limit);
  if (e.generator_count() > kMaxHomGenerators)
    throw Error(ErrorCode::kBoundExceeded, "more than 4 additive generators");
  return e.run();
}

/// A bijective hom R -> S if one exists. Within the canonicalization bound
/// the answer comes from comparing canonical forms; otherwise by direct
/// search over injective homs.
inline std::optional<RingHom> find_isomorphism(const FiniteRing& r, const FiniteRing& s,
                                               std::size_t canon_bound = kDefaultCanonBound,
                                               std::size_t hom_bound = kDefaultHomBound) {
  if (r.order() != s.order()) return std::nullopt;
  if (r.additive_exponent() != s.additive_exponent()) return std::nullopt;
  if (r.unit().has_value() != s.unit().has_value()) return std::nullopt;
  if (r.order() <= canon_bound) {
    const auto cr = canonical_form(r, canon_bound);
    const auto cs = canonical_form(s, canon_bound);
    if (!(cr.ring == cs.ring)) return std::nullopt;
    std::vector<Elem> inv_s(s.order());
    for (std::size_t x = 0; x < s.order(); ++x) inv_s[cs.perm[x]] = static_cast<Elem>(x);
    std::vector<Elem> m(r.order());
    for (std::size_t x = 0; x < r.order(); ++x) m[x] = inv_s[cr.perm[x]];
    return require_hom(std::move(m), r, s, "canonical isomorphism");
  }
  HomConstraint c;
  c.require_injective = true;
  auto homs = enumerate_homs(r, s, c, hom_bound, 1);
  if (homs.empty()) return std::nullopt;
  return std::move(homs.front());
}

}  // namespace fring
