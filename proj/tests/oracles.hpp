#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's search code: they only read tables.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "fring/ring.hpp"

namespace oracle {

using fring::Elem;
using Flat = std::vector<int>;

inline int at(const Flat& t, std::size_t n, int a, int b) { return t[a * n + b]; }

inline bool zero_at_0(std::size_t n, const Flat& add) {
  for (std::size_t x = 0; x < n; ++x)
    if (at(add, n, 0, x) != static_cast<int>(x) || at(add, n, x, 0) != static_cast<int>(x))
      return false;
  return true;
}

inline bool has_inverses(std::size_t n, const Flat& add) {
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(add, n, a, b) == 0;
    if (!found) return false;
  }
  return true;
}

inline bool abelian(std::size_t n, const Flat& add) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (at(add, n, a, b) != at(add, n, b, a)) return false;
  return true;
}

inline bool associative(std::size_t n, const Flat& t) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(t, n, at(t, n, a, b), c) != at(t, n, a, at(t, n, b, c))) return false;
  return true;
}

inline bool distributive(std::size_t n, const Flat& add, const Flat& mul) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (at(mul, n, a, at(add, n, b, c)) != at(add, n, at(mul, n, a, b), at(mul, n, a, c)))
          return false;
        if (at(mul, n, at(add, n, a, b), c) != at(add, n, at(mul, n, a, c), at(mul, n, b, c)))
          return false;
      }
  return true;
}

inline bool in_range(std::size_t n, const Flat& t) {
  return std::all_of(t.begin(), t.end(), [&](int v) { return v >= 0 && v < static_cast<int>(n); });
}

inline bool is_ring(std::size_t n, const Flat& add, const Flat& mul) {
  return in_range(n, add) && in_range(n, mul) && zero_at_0(n, add) && has_inverses(n, add) &&
         abelian(n, add) && associative(n, add) && associative(n, mul) &&
         distributive(n, add, mul);
}

inline Flat flat_add(const fring::FiniteRing& r) {
  return Flat(r.add_table().begin(), r.add_table().end());
}
inline Flat flat_mul(const fring::FiniteRing& r) {
  return Flat(r.mul_table().begin(), r.mul_table().end());
}

/// Tries every bijection fixing 0.
inline bool isomorphic(std::size_t n, const Flat& add1, const Flat& mul1, const Flat& add2,
                       const Flat& mul2) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = p[at(add1, n, a, b)] == at(add2, n, p[a], p[b]) &&
             p[at(mul1, n, a, b)] == at(mul2, n, p[a], p[b]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

struct RawRing {
  Flat add;
  Flat mul;
};

/// Every multiplication table on the given group that satisfies the ring
/// axioms, one per isomorphism class (first in lexicographic table order).
inline std::vector<RawRing> rings_on_group(std::size_t n, const Flat& add) {
  std::vector<RawRing> reps;
  Flat mul(n * n, 0);
  // 0*x = x*0 = 0 is forced; the other (n-1)^2 cells range over all values
  std::vector<std::size_t> cells;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) cells.push_back(a * n + b);
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto cell : cells) {
      mul[cell] = static_cast<int>(c % n);
      c /= n;
    }
    if (!associative(n, mul) || !distributive(n, add, mul)) continue;
    bool seen = false;
    for (const auto& r : reps)
      if (isomorphic(n, add, mul, r.add, r.mul)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back({add, mul});
  }
  return reps;
}

inline Flat cyclic_add(std::size_t n) {
  Flat t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<int>((a + b) % n);
  return t;
}

/// Klein four-group as XOR on 0..3.
inline Flat klein_add() {
  Flat t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return t;
}

/// Groups of order 1..4 up to isomorphism, written out by hand.
inline std::vector<Flat> groups_of_order(std::size_t n) {
  if (n == 4) return {cyclic_add(4), klein_add()};
  return {cyclic_add(n)};
}

inline std::vector<RawRing> all_rings(std::size_t n) {
  std::vector<RawRing> out;
  for (const auto& g : groups_of_order(n))
    for (auto& r : rings_on_group(n, g)) out.push_back(std::move(r));
  return out;
}

struct MapPair {
  std::vector<int> rho;
  std::vector<int> lam;
  friend auto operator<=>(const MapPair&, const MapPair&) = default;
};

/// All pairs of additive self-maps with rho(x) y = x lam(y), by scanning
/// every pair of arbitrary maps.
inline std::set<MapPair> multiplier_pairs(const fring::FiniteRing& r) {
  const std::size_t n = r.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  auto decode = [&](std::size_t code) {
    std::vector<int> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<int>(code % n);
      code /= n;
    }
    return f;
  };
  auto additive = [&](const std::vector<int>& f) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (f[r.add(Elem(a), Elem(b))] != r.add(Elem(f[a]), Elem(f[b]))) return false;
    return true;
  };
  std::vector<std::vector<int>> maps;
  for (std::size_t code = 0; code < total; ++code) maps.push_back(decode(code));
  std::set<MapPair> out;
  for (const auto& rho : maps)
    for (const auto& lam : maps) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y)
          ok = r.mul(Elem(rho[x]), Elem(y)) == r.mul(Elem(x), Elem(lam[y]));
      if (ok && additive(rho) && additive(lam)) out.insert({rho, lam});
    }
  return out;
}

}  // namespace oracle
