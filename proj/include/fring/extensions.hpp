#pragma once

/**
 * @file extensions.hpp
 * @brief Unitizations of a ring R in which R sits as an ideal: the Dorroh
 *        extension (initial) and the multiplier ring (terminal), together
 *        with the canonical maps into and out of any unital ring containing
 *        R as an ideal.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fring/error.hpp"
#include "fring/morphism.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring {

inline constexpr std::size_t kDefaultMultiplierBound = 16;

// ---------------------------------------------------------------------------
// Dorroh extension over Z_m
// ---------------------------------------------------------------------------

struct DorrohRing {
  FiniteRing base;
  std::size_t modulus = 1;
  /// Pairs (r, z) with index r * modulus + z.
  FiniteRing ring;
  RingHom iota;

  Elem encode(Elem r, std::size_t z) const {
    return static_cast<Elem>(r * modulus + z % modulus);
  }
  std::pair<Elem, std::size_t> decode(Elem x) const {
    return {static_cast<Elem>(x / modulus), x % modulus};
  }
};

/// R x Z_m with (r,z)(s,w) = (rs + z.s + w.r, zw). The integer action is
/// m-periodic because m is a multiple of the additive exponent, so Z_m stands
/// in for Z. Unit (0,1); iota: r -> (r,0).
inline DorrohRing dorroh_extension(const FiniteRing& r, std::optional<std::size_t> modulus = {}) {
  const std::size_t exp = r.additive_exponent();
  const std::size_t m = modulus.value_or(exp);
  if (m == 0 || m % exp != 0)
    throw Error(ErrorCode::kBadModulus, "modulus " + std::to_string(m) +
                                            " is not a positive multiple of the additive "
                                            "exponent " +
                                            std::to_string(exp));
  const std::size_t nr = r.order(), n = nr * m;
  if (n > kMaxOrder)
    throw Error(ErrorCode::kBoundExceeded, "Dorroh extension of order " + std::to_string(n));

  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto a = static_cast<Elem>(x / m);
    const std::size_t z = x % m;
    for (std::size_t y = 0; y < n; ++y) {
      const auto b = static_cast<Elem>(y / m);
      const std::size_t w = y % m;
      add[x * n + y] = static_cast<Elem>(r.add(a, b) * m + (z + w) % m);
      const Elem first = r.add(r.add(r.mul(a, b), r.scale(static_cast<std::int64_t>(z), b)),
                               r.scale(static_cast<std::int64_t>(w), a));
      mul[x * n + y] = static_cast<Elem>(first * m + (z * w) % m);
    }
  }
  DorrohRing d{r, m, make_ring(n, std::move(add), std::move(mul)), {}};

  if (d.ring.unit() != d.encode(0, 1 % m))
    throw Error(ErrorCode::kFatalInconsistency, "Dorroh unit is not (0,1)");
  std::vector<Elem> iota(nr);
  for (std::size_t x = 0; x < nr; ++x) iota[x] = d.encode(static_cast<Elem>(x), 0);
  d.iota = require_hom(std::move(iota), r, d.ring, "Dorroh iota");
  if (!d.iota.injective) throw Error(ErrorCode::kFatalInconsistency, "Dorroh iota not injective");
  if (!classify_subset(image(d.iota)).is_ideal)
    throw Error(ErrorCode::kFatalInconsistency, "Dorroh iota image is not an ideal");
  return d;
}

// ---------------------------------------------------------------------------
// Multipliers
// ---------------------------------------------------------------------------

/// A pair of self-maps with rho(r) s = r lam(s) for all r, s.
struct Multiplier {
  std::vector<Elem> rho;
  std::vector<Elem> lam;

  friend bool operator==(const Multiplier&, const Multiplier&) = default;
  friend auto operator<=>(const Multiplier&, const Multiplier&) = default;
};

inline bool is_compatible(const FiniteRing& r, const Multiplier& m) {
  const std::size_t n = r.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.mul(m.rho[x], static_cast<Elem>(y)) != r.mul(static_cast<Elem>(x), m.lam[y]))
        return false;
  return true;
}

/// (rho_r, lam_r) = (x -> x r, x -> r x).
inline Multiplier element_multiplier(const FiniteRing& r, Elem e) {
  if (e >= r.order()) throw Error(ErrorCode::kShape, "element out of range");
  Multiplier m{std::vector<Elem>(r.order()), std::vector<Elem>(r.order())};
  for (std::size_t x = 0; x < r.order(); ++x) {
    m.rho[x] = r.mul(static_cast<Elem>(x), e);
    m.lam[x] = r.mul(e, static_cast<Elem>(x));
  }
  return m;
}

/// (rho,lam) * (rho',lam') = (rho' o rho, lam o lam').
inline Multiplier multiply(const Multiplier& a, const Multiplier& b) {
  const std::size_t n = a.rho.size();
  Multiplier c{std::vector<Elem>(n), std::vector<Elem>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    c.rho[x] = b.rho[a.rho[x]];
    c.lam[x] = a.lam[b.lam[x]];
  }
  return c;
}

inline Multiplier add_multipliers(const FiniteRing& r, const Multiplier& a, const Multiplier& b) {
  const std::size_t n = a.rho.size();
  Multiplier c{std::vector<Elem>(n), std::vector<Elem>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    c.rho[x] = r.add(a.rho[x], b.rho[x]);
    c.lam[x] = r.add(a.lam[x], b.lam[x]);
  }
  return c;
}

struct MultiplierRing {
  FiniteRing base;
  /// Sorted by (rho table, lam table); index i of `ring` is elements[i].
  std::vector<Multiplier> elements;
  FiniteRing ring;
  RingHom iota;

  std::optional<Elem> index_of(const Multiplier& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || !(*it == m)) return std::nullopt;
    return static_cast<Elem>(it - elements.begin());
  }
};

namespace detail {

/// Every additive self-map of r, one per consistent assignment of images to
/// a minimal generating set.
inline std::vector<std::vector<Elem>> additive_self_maps(const FiniteRing& r) {
  const auto gens = minimal_generating_set(r);
  const std::size_t n = r.order();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> images(gens.size(), 0);
  auto extend = [&]() -> std::optional<std::vector<Elem>> {
    std::vector<int> f(n, -1);
    f[0] = 0;
    std::vector<Elem> reached{0};
    for (std::size_t head = 0; head < reached.size(); ++head) {
      const Elem x = reached[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = r.add(x, gens[i]);
        const int fy = r.add(static_cast<Elem>(f[x]), images[i]);
        if (f[y] < 0) {
          f[y] = fy;
          reached.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return std::vector<Elem>(f.begin(), f.end());
  };
  // odometer over generator images
  while (true) {
    if (auto f = extend()) out.push_back(std::move(*f));
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == n) images[i++] = 0;
    if (i == images.size()) break;
  }
  return out;
}

inline bool is_additive_map(const FiniteRing& r, const std::vector<Elem>& f) {
  for (std::size_t x = 0; x < r.order(); ++x)
    for (std::size_t y = 0; y < r.order(); ++y)
      if (f[r.add(static_cast<Elem>(x), static_cast<Elem>(y))] != r.add(f[x], f[y])) return false;
  return true;
}

}  // namespace detail

/// The ring of all multipliers of a non-degenerate ring R.
///
/// For each additive lam, rho(r) is solved as the unique x with
/// x s = r lam(s) for all s (unique because R is non-degenerate); pairs with
/// no solution are dropped. The resulting ring is validated and its unit,
/// iota and ideal image are checked before returning.
inline MultiplierRing multiplier_ring(const FiniteRing& r,
                                      std::size_t bound = kDefaultMultiplierBound) {
  if (r.order() > bound)
    throw Error(ErrorCode::kBoundExceeded, "multiplier ring of order " +
                                               std::to_string(r.order()) + " exceeds bound " +
                                               std::to_string(bound));
  if (const auto nd = is_non_degenerate(r); !nd)
    throw Error(ErrorCode::kDegenerate, "element " + std::to_string(*nd.witness) +
                                            " annihilates the ring");
  const std::size_t n = r.order();

  // Row x of the multiplication table identifies x.
  std::map<std::vector<Elem>, Elem> by_row;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Elem> row(n);
    for (std::size_t s = 0; s < n; ++s) row[s] = r.mul(static_cast<Elem>(x), static_cast<Elem>(s));
    by_row.emplace(std::move(row), static_cast<Elem>(x));
  }

  std::vector<Multiplier> elems;
  std::vector<Elem> target(n);
  for (auto& lam : detail::additive_self_maps(r)) {
    Multiplier m{std::vector<Elem>(n), lam};
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t s = 0; s < n; ++s) target[s] = r.mul(static_cast<Elem>(x), lam[s]);
      auto it = by_row.find(target);
      if (it == by_row.end()) ok = false;
      else m.rho[x] = it->second;
    }
    if (ok) elems.push_back(std::move(m));
  }
  std::sort(elems.begin(), elems.end());

  for (const auto& m : elems)
    if (!detail::is_additive_map(r, m.rho) || !is_compatible(r, m))
      throw Error(ErrorCode::kFatalInconsistency, "solved multiplier fails its laws");

  const std::size_t k = elems.size();
  if (k > kMaxOrder) throw Error(ErrorCode::kBoundExceeded, "multiplier ring too large");
  MultiplierRing mr{r, std::move(elems), FiniteRing{}, {}};
  std::vector<Elem> add_t(k * k), mul_t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto s = mr.index_of(add_multipliers(r, mr.elements[i], mr.elements[j]));
      const auto p = mr.index_of(multiply(mr.elements[i], mr.elements[j]));
      if (!s || !p) throw Error(ErrorCode::kFatalInconsistency, "multipliers not closed");
      add_t[i * k + j] = *s;
      mul_t[i * k + j] = *p;
    }
  mr.ring = make_ring(k, std::move(add_t), std::move(mul_t));

  std::vector<Elem> id(n);
  std::iota(id.begin(), id.end(), Elem{0});
  if (mr.ring.unit() != mr.index_of(Multiplier{id, id}))
    throw Error(ErrorCode::kFatalInconsistency, "multiplier unit is not (id,id)");

  std::vector<Elem> iota(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto idx = mr.index_of(element_multiplier(r, static_cast<Elem>(x)));
    if (!idx) throw Error(ErrorCode::kFatalInconsistency, "element multiplier missing");
    iota[x] = *idx;
  }
  mr.iota = require_hom(std::move(iota), r, mr.ring, "multiplier iota");
  if (!mr.iota.injective || !classify_subset(image(mr.iota)).is_ideal)
    throw Error(ErrorCode::kFatalInconsistency, "multiplier iota is not an ideal embedding");
  return mr;
}

/// rho(s r) = s rho(r) and lam(r s) = lam(r) s for all r, s.
inline bool is_bimodule_map_pair(const FiniteRing& r, const Multiplier& m) {
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto s = static_cast<Elem>(a), x = static_cast<Elem>(b);
      if (m.rho[r.mul(s, x)] != r.mul(s, m.rho[x])) return false;
      if (m.lam[r.mul(x, s)] != r.mul(m.lam[x], s)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical maps
// ---------------------------------------------------------------------------

namespace detail {

inline void require_ideal_embedding(const RingHom& embed, const FiniteRing& s) {
  if (!(embed.codomain == s))
    throw Error(ErrorCode::kPreconditionFail, "embedding does not land in S");
  if (!embed.injective) throw Error(ErrorCode::kPreconditionFail, "embedding is not injective");
  if (!classify_subset(image(embed)).is_ideal)
    throw Error(ErrorCode::kPreconditionFail, "embedded image is not an ideal of S");
}

}  // namespace detail

/// d: (r, z) -> embed(r) + z 1_S.
inline RingHom canonical_d(const DorrohRing& d, const FiniteRing& s, const RingHom& embed) {
  if (!s.unit()) throw Error(ErrorCode::kPreconditionFail, "S has no unit");
  if (!(embed.domain == d.base))
    throw Error(ErrorCode::kPreconditionFail, "embedding is not defined on the Dorroh base");
  detail::require_ideal_embedding(embed, s);
  const Elem one = *s.unit();
  std::vector<Elem> f(d.ring.order());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto [r, z] = d.decode(static_cast<Elem>(x));
    f[x] = s.add(embed(r), s.scale(static_cast<std::int64_t>(z), one));
  }
  return require_hom(std::move(f), d.ring, s, "canonical d");
}

/// m: s -> (x -> x s, x -> s x), read back through the embedding.
inline RingHom canonical_m(const MultiplierRing& mr, const FiniteRing& s, const RingHom& embed) {
  if (!s.unit()) throw Error(ErrorCode::kPreconditionFail, "S has no unit");
  if (!(embed.domain == mr.base))
    throw Error(ErrorCode::kPreconditionFail, "embedding is not defined on the multiplier base");
  detail::require_ideal_embedding(embed, s);
  const std::size_t n = mr.base.order();
  std::vector<int> back(s.order(), -1);
  for (std::size_t x = 0; x < n; ++x) back[embed(static_cast<Elem>(x))] = static_cast<int>(x);

  std::vector<Elem> f(s.order());
  for (std::size_t t = 0; t < s.order(); ++t) {
    Multiplier m{std::vector<Elem>(n), std::vector<Elem>(n)};
    for (std::size_t x = 0; x < n; ++x) {
      const Elem ex = embed(static_cast<Elem>(x));
      const int right = back[s.mul(ex, static_cast<Elem>(t))];
      const int left = back[s.mul(static_cast<Elem>(t), ex)];
      if (right < 0 || left < 0)
        throw Error(ErrorCode::kPreconditionFail, "product leaves the embedded ideal");
      m.rho[x] = static_cast<Elem>(right);
      m.lam[x] = static_cast<Elem>(left);
    }
    const auto idx = mr.index_of(m);
    if (!idx)
      throw HomFailure("canonical m: image is not a multiplier",
                       HomViolation{HomViolation::Kind::kRange, static_cast<Elem>(t), 0});
    f[t] = *idx;
  }
  return require_hom(std::move(f), s, mr.ring, "canonical m");
}

struct UniversalPropertyReport {
  std::size_t dorroh_modulus = 0;
  bool d_exists = false;
  bool d_restricts_to_embed = false;
  std::size_t d_count_fixing_r = 0;  ///< unital homs R' -> S extending embed
  std::size_t d_count_unital = 0;    ///< all unital homs R' -> S

  bool multiplier_applicable = false;
  bool m_exists = false;
  bool m_restricts_to_iota = false;
  std::size_t m_count_fixing_r = 0;  ///< unital homs S -> M(R) extending iota
  std::size_t m_count_unital = 0;    ///< all unital homs S -> M(R)

  std::vector<std::string> notes;
};

/// Existence of d and m for R embedded as an ideal in S, and the number of
/// candidate homs under two readings of "unique": unital homs that agree with
/// the embedding of R, and unital homs without that restriction.
///
/// The Dorroh side uses modulus lcm(exponent(R), additive order of 1_S) so
/// that z -> z 1_S is well defined.
inline UniversalPropertyReport verify_universal_property(
    const FiniteRing& r, const FiniteRing& s, const RingHom& embed,
    std::size_t hom_bound = kDefaultHomBound) {
  if (!s.unit()) throw Error(ErrorCode::kPreconditionFail, "S has no unit");
  detail::require_ideal_embedding(embed, s);
  UniversalPropertyReport rep;
  const std::size_t m = std::lcm(r.additive_exponent(), s.additive_order(*s.unit()));
  rep.dorroh_modulus = m;
  const auto dor = dorroh_extension(r, m);

  try {
    const auto d = canonical_d(dor, s, embed);
    rep.d_exists = true;
    rep.d_restricts_to_embed = compose(d, dor.iota).map == embed.map;
  } catch (const HomFailure& e) {
    rep.notes.emplace_back(e.what());
  }
  HomConstraint fix_d;
  fix_d.require_unital = true;
  for (std::size_t x = 0; x < r.order(); ++x)
    fix_d.fixed_points.emplace_back(dor.iota(static_cast<Elem>(x)), embed(static_cast<Elem>(x)));
  rep.d_count_fixing_r = enumerate_homs(dor.ring, s, fix_d, hom_bound).size();
  rep.d_count_unital = enumerate_homs(dor.ring, s, {{}, true, false}, hom_bound).size();

  if (!is_non_degenerate(r)) {
    rep.notes.emplace_back("multiplier side inapplicable: R is degenerate");
    return rep;
  }
  rep.multiplier_applicable = true;
  const auto mr = multiplier_ring(r);
  try {
    const auto mm = canonical_m(mr, s, embed);
    rep.m_exists = true;
    rep.m_restricts_to_iota = compose(mm, embed).map == mr.iota.map;
  } catch (const HomFailure& e) {
    rep.notes.emplace_back(e.what());
  }
  HomConstraint fix_m;
  fix_m.require_unital = true;
  for (std::size_t x = 0; x < r.order(); ++x)
    fix_m.fixed_points.emplace_back(embed(static_cast<Elem>(x)), mr.iota(static_cast<Elem>(x)));
  rep.m_count_fixing_r = enumerate_homs(s, mr.ring, fix_m, hom_bound).size();
  rep.m_count_unital = enumerate_homs(s, mr.ring, {{}, true, false}, hom_bound).size();
  return rep;
}

}  // namespace fring
