#pragma once

// Named rings used as test instances and catalog injections.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fring/error.hpp"
#include "fring/ring.hpp"

namespace fring {

/// Ring on a list of concrete values. elements[0] must be the zero; add and
/// mul must be closed on the list. The result is validated.
template <typename T, typename Add, typename Mul>
FiniteRing ring_from_elements(const std::vector<T>& elements, Add add, Mul mul) {
  const std::size_t n = elements.size();
  std::map<T, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], static_cast<Elem>(i));
  if (index.size() != n) throw Error(ErrorCode::kShape, "repeated element");
  auto lookup = [&](const T& v) {
    auto it = index.find(v);
    if (it == index.end()) throw Error(ErrorCode::kShape, "operation leaves the element list");
    return it->second;
  };
  std::vector<Elem> at(n * n), mt(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      at[a * n + b] = lookup(add(elements[a], elements[b]));
      mt[a * n + b] = lookup(mul(elements[a], elements[b]));
    }
  return make_ring(n, std::move(at), std::move(mt));
}

/// Z_n.
inline FiniteRing cyclic_ring(std::size_t n) {
  std::vector<std::size_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = i;
  return ring_from_elements(
      e, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [n](std::size_t a, std::size_t b) { return (a * b) % n; });
}

/// Z_n with every product zero.
inline FiniteRing zero_ring(std::size_t n) {
  std::vector<std::size_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = i;
  return ring_from_elements(
      e, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [](std::size_t, std::size_t) { return std::size_t{0}; });
}

/// Zero multiplication on an existing additive group.
inline FiniteRing with_zero_product(const FiniteRing& r) {
  std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
  std::vector<Elem> mul(add.size(), 0);
  return make_ring(r.order(), std::move(add), std::move(mul));
}

namespace detail {

using Matrix = std::vector<std::size_t>;  // row-major k x k

inline std::vector<Matrix> all_matrices(std::size_t k, std::size_t q) {
  std::vector<Matrix> out;
  Matrix m(k * k, 0);
  while (true) {
    out.push_back(m);
    std::size_t i = k * k;
    while (i > 0 && ++m[i - 1] == q) m[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

struct MatrixAdd {
  std::size_t q;
  Matrix operator()(const Matrix& a, const Matrix& b) const {
    Matrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % q;
    return c;
  }
};

struct MatrixMul {
  std::size_t k, q;
  Matrix operator()(const Matrix& a, const Matrix& b) const {
    Matrix c(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t s = 0;
        for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * k + j];
        c[i * k + j] = s % q;
      }
    return c;
  }
};

}  // namespace detail

/// M_k(Z_q). The matrix with row-major entries (e0, e1, ...) has index
/// e0 q^(k*k-1) + e1 q^(k*k-2) + ...
inline FiniteRing matrix_ring(std::size_t k, std::size_t q) {
  return ring_from_elements(detail::all_matrices(k, q), detail::MatrixAdd{q},
                            detail::MatrixMul{k, q});
}

/// Upper triangular k x k matrices over Z_q.
inline FiniteRing upper_triangular_ring(std::size_t k, std::size_t q) {
  std::vector<detail::Matrix> elems;
  for (auto& m : detail::all_matrices(k, q)) {
    bool upper = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j) upper = upper && m[i * k + j] == 0;
    if (upper) elems.push_back(m);
  }
  return ring_from_elements(elems, detail::MatrixAdd{q}, detail::MatrixMul{k, q});
}

/// GF(2^k) as polynomials over GF(2) modulo a fixed irreducible polynomial
/// (k = 1..4). Element index = coefficient bit pattern.
inline FiniteRing binary_field(unsigned k) {
  static constexpr std::uint32_t kModulus[] = {0, 0b11, 0b111, 0b1011, 0b10011};
  if (k < 1 || k > 4) throw Error(ErrorCode::kBoundExceeded, "binary_field supports k = 1..4");
  const std::uint32_t mod = kModulus[k];
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>(i);
  return ring_from_elements(
      e, [](std::uint32_t a, std::uint32_t b) { return a ^ b; },
      [k, mod](std::uint32_t a, std::uint32_t b) {
        std::uint32_t p = 0;
        for (unsigned i = 0; i < k; ++i)
          if ((b >> i) & 1U) p ^= a << i;
        for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i)
          if ((p >> i) & 1U) p ^= mod << (i - static_cast<int>(k));
        return p;
      });
}

}  // namespace fring
