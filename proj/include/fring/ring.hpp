#pragma once

/**
 * @file ring.hpp
 * @brief Table-represented finite rings.
 *
 * A ring of order n lives on the indices {0, ..., n-1}. Index 0 is always the
 * additive zero. Addition and multiplication are stored as flat row-major
 * n x n tables; negation, additive orders and the unit are derived once at
 * construction. Rings are not assumed to have a unit.
 *
 * FiniteRing is an immutable handle: copies share the same tables.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fring/error.hpp"

namespace fring {

using Elem = std::uint16_t;
inline constexpr std::size_t kMaxOrder = 256;

/// Row-major table as read from text or written by hand.
using Table = std::vector<std::vector<int>>;

namespace detail {

struct RingData {
  std::size_t n = 1;
  std::vector<Elem> add{0};
  std::vector<Elem> mul{0};
  std::vector<Elem> neg{0};
  std::vector<std::size_t> additive_order{1};
  std::optional<Elem> unit;
  std::size_t exponent = 1;
};

}  // namespace detail

class FiniteRing {
 public:
  /// The ring of order 1.
  FiniteRing() : d_(std::make_shared<detail::RingData>()) { derive(*mutable_data()); }

  /// Builds a ring from flat tables without checking the axioms. Callers are
  /// responsible for passing tables that satisfy them (see validate_ring).
  static FiniteRing from_tables_unchecked(std::size_t n, std::vector<Elem> add,
                                          std::vector<Elem> mul) {
    auto data = std::make_shared<detail::RingData>();
    data->n = n;
    data->add = std::move(add);
    data->mul = std::move(mul);
    derive(*data);
    return FiniteRing(std::move(data));
  }

  std::size_t order() const noexcept { return d_->n; }

  Elem add(Elem a, Elem b) const noexcept { return d_->add[a * d_->n + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return d_->mul[a * d_->n + b]; }
  Elem neg(Elem a) const noexcept { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  /// The z-fold sum x + ... + x; negative z uses -x.
  Elem scale(std::int64_t z, Elem x) const noexcept {
    const auto ord = static_cast<std::int64_t>(d_->additive_order[x]);
    std::int64_t k = z % ord;
    if (k < 0) k += ord;
    Elem acc = 0;
    for (std::int64_t i = 0; i < k; ++i) acc = add(acc, x);
    return acc;
  }

  std::size_t additive_order(Elem x) const noexcept { return d_->additive_order[x]; }
  std::size_t additive_exponent() const noexcept { return d_->exponent; }
  std::optional<Elem> unit() const noexcept { return d_->unit; }

  std::span<const Elem> add_table() const noexcept { return d_->add; }
  std::span<const Elem> mul_table() const noexcept { return d_->mul; }

  Table add_rows() const { return rows(d_->add); }
  Table mul_rows() const { return rows(d_->mul); }

  bool shares_tables_with(const FiniteRing& other) const noexcept { return d_ == other.d_; }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) noexcept {
    if (a.d_ == b.d_) return true;
    return a.d_->n == b.d_->n && a.d_->add == b.d_->add && a.d_->mul == b.d_->mul;
  }

 private:
  explicit FiniteRing(std::shared_ptr<detail::RingData> d) : d_(std::move(d)) {}

  detail::RingData* mutable_data() { return const_cast<detail::RingData*>(d_.get()); }

  Table rows(const std::vector<Elem>& flat) const {
    Table t(d_->n, std::vector<int>(d_->n));
    for (std::size_t a = 0; a < d_->n; ++a)
      for (std::size_t b = 0; b < d_->n; ++b) t[a][b] = flat[a * d_->n + b];
    return t;
  }

  static void derive(detail::RingData& d) {
    const std::size_t n = d.n;
    d.neg.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d.add[a * n + b] == 0) {
          d.neg[a] = static_cast<Elem>(b);
          break;
        }

    d.additive_order.assign(n, 1);
    d.exponent = 1;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t k = 1;
      Elem acc = static_cast<Elem>(x);
      while (acc != 0 && k <= n) {
        acc = d.add[acc * n + x];
        ++k;
      }
      d.additive_order[x] = k;
      d.exponent = std::lcm(d.exponent, k);
    }

    d.unit.reset();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = d.mul[e * n + x] == x && d.mul[x * n + e] == x;
      if (ok) {
        d.unit = static_cast<Elem>(e);
        break;
      }
    }
  }

  std::shared_ptr<const detail::RingData> d_;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ViolationCode {
  kZeroNotAt0,
  kNoInverse,
  kNotAbelian,
  kAddAssocFail,
  kMulAssocFail,
  kDistribFail,
};

constexpr std::string_view to_string(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::kZeroNotAt0: return "ZERO_NOT_AT_0";
    case ViolationCode::kNoInverse: return "NO_INVERSE";
    case ViolationCode::kNotAbelian: return "NOT_ABELIAN";
    case ViolationCode::kAddAssocFail: return "ADD_ASSOC_FAIL";
    case ViolationCode::kMulAssocFail: return "MUL_ASSOC_FAIL";
    case ViolationCode::kDistribFail: return "DISTRIB_FAIL";
  }
  return "UNKNOWN";
}

/// One failed axiom. Unused witness slots are 0:
///   ZERO_NOT_AT_0 (x,0,0)  NO_INVERSE (a,0,0)  NOT_ABELIAN (a,b,0)
///   ADD_ASSOC_FAIL, MUL_ASSOC_FAIL, DISTRIB_FAIL (a,b,c)
struct Violation {
  ViolationCode code;
  std::array<Elem, 3> witness{};

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(ViolationCode code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
  const Violation* find(ViolationCode code) const {
    for (const auto& v : violations)
      if (v.code == code) return &v;
    return nullptr;
  }
};

struct ValidationResult {
  std::optional<FiniteRing> ring;
  ValidationReport report;

  explicit operator bool() const noexcept { return ring.has_value(); }
};

namespace detail {

inline std::size_t checked_order(const Table& add, const Table& mul) {
  const std::size_t n = add.size();
  if (n == 0) throw Error(ErrorCode::kShape, "empty addition table");
  if (n > kMaxOrder)
    throw Error(ErrorCode::kShape, "order " + std::to_string(n) + " exceeds " +
                                       std::to_string(kMaxOrder));
  if (mul.size() != n) throw Error(ErrorCode::kShape, "tables have different row counts");
  for (const Table* t : {&add, &mul}) {
    for (const auto& row : *t) {
      if (row.size() != n) throw Error(ErrorCode::kShape, "table is not square");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw Error(ErrorCode::kShape, "entry " + std::to_string(v) + " out of range");
    }
  }
  return n;
}

inline std::vector<Elem> flatten(const Table& t) {
  std::vector<Elem> flat;
  flat.reserve(t.size() * t.size());
  for (const auto& row : t)
    for (int v : row) flat.push_back(static_cast<Elem>(v));
  return flat;
}

/// Evaluates a single witness against flat tables; true when the witness
/// really breaks the named axiom.
inline bool violates(ViolationCode code, const std::array<Elem, 3>& w, std::size_t n,
                     std::span<const Elem> add, std::span<const Elem> mul) {
  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };
  const std::size_t a = w[0], b = w[1], c = w[2];
  if (a >= n || b >= n || c >= n) return false;
  switch (code) {
    case ViolationCode::kZeroNotAt0:
      return A(0, a) != a || A(a, 0) != a;
    case ViolationCode::kNoInverse:
      for (std::size_t y = 0; y < n; ++y)
        if (A(a, y) == 0 && A(y, a) == 0) return false;
      return true;
    case ViolationCode::kNotAbelian:
      return A(a, b) != A(b, a);
    case ViolationCode::kAddAssocFail:
      return A(A(a, b), c) != A(a, A(b, c));
    case ViolationCode::kMulAssocFail:
      return M(M(a, b), c) != M(a, M(b, c));
    case ViolationCode::kDistribFail:
      return M(a, A(b, c)) != A(M(a, b), M(a, c)) || M(A(b, c), a) != A(M(b, a), M(c, a));
  }
  return false;
}

inline ValidationReport validate_flat(std::size_t n, std::span<const Elem> add,
                                      std::span<const Elem> mul) {
  ValidationReport report;
  auto record = [&](ViolationCode code, std::size_t a, std::size_t b, std::size_t c) {
    report.violations.push_back(
        {code, {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)}});
  };
  auto first_unary = [&](ViolationCode code) {
    for (std::size_t a = 0; a < n; ++a)
      if (violates(code, {static_cast<Elem>(a), 0, 0}, n, add, mul)) return record(code, a, 0, 0);
  };
  auto first_binary = [&](ViolationCode code) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (violates(code, {static_cast<Elem>(a), static_cast<Elem>(b), 0}, n, add, mul))
          return record(code, a, b, 0);
  };
  auto first_ternary = [&](ViolationCode code) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (violates(code, {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)},
                       n, add, mul))
            return record(code, a, b, c);
  };

  first_unary(ViolationCode::kZeroNotAt0);
  first_unary(ViolationCode::kNoInverse);
  first_binary(ViolationCode::kNotAbelian);
  first_ternary(ViolationCode::kAddAssocFail);
  first_ternary(ViolationCode::kMulAssocFail);
  first_ternary(ViolationCode::kDistribFail);
  report.ok = report.violations.empty();
  return report;
}

}  // namespace detail

/// Checks every ring axiom exhaustively. Throws Error(kShape) for malformed
/// tables; otherwise returns either the ring or a report holding the first
/// witness (lexicographic order) for each failed axiom family.
inline ValidationResult validate_ring(const Table& add, const Table& mul) {
  const std::size_t n = detail::checked_order(add, mul);
  auto flat_add = detail::flatten(add);
  auto flat_mul = detail::flatten(mul);
  ValidationResult result;
  result.report = detail::validate_flat(n, flat_add, flat_mul);
  if (result.report.ok)
    result.ring = FiniteRing::from_tables_unchecked(n, std::move(flat_add), std::move(flat_mul));
  return result;
}

/// Replays a reported violation against the tables it came from.
inline bool replay_violation(const Violation& v, const Table& add, const Table& mul) {
  const std::size_t n = detail::checked_order(add, mul);
  const auto fa = detail::flatten(add);
  const auto fm = detail::flatten(mul);
  return detail::violates(v.code, v.witness, n, fa, fm);
}

/// Validating constructor from flat tables; throws kInvalidRing naming the
/// first violation.
inline FiniteRing make_ring(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul) {
  if (n == 0 || n > kMaxOrder || add.size() != n * n || mul.size() != n * n)
    throw Error(ErrorCode::kShape, "bad flat table size");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add[i] >= n || mul[i] >= n) throw Error(ErrorCode::kShape, "entry out of range");
  const auto report = detail::validate_flat(n, add, mul);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kInvalidRing,
                std::string(to_string(v.code)) + " at (" + std::to_string(v.witness[0]) + "," +
                    std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")");
  }
  return FiniteRing::from_tables_unchecked(n, std::move(add), std::move(mul));
}

inline FiniteRing make_ring(const Table& add, const Table& mul) {
  const std::size_t n = detail::checked_order(add, mul);
  return make_ring(n, detail::flatten(add), detail::flatten(mul));
}

// ---------------------------------------------------------------------------
// Global properties
// ---------------------------------------------------------------------------

inline std::optional<Elem> find_unit(const FiniteRing& r) { return r.unit(); }

inline std::size_t additive_exponent(const FiniteRing& r) { return r.additive_exponent(); }

/// Which product vanishes for a degeneracy witness r.
enum class VanishingSide {
  kLeft,   ///< rR = {0}
  kRight,  ///< Rr = {0}
};

struct NonDegeneracy {
  bool non_degenerate = true;
  std::optional<Elem> witness;
  VanishingSide side = VanishingSide::kLeft;

  explicit operator bool() const noexcept { return non_degenerate; }
};

inline NonDegeneracy is_non_degenerate(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (std::size_t x = 1; x < n; ++x) {
    bool row_zero = true, col_zero = true;
    for (std::size_t y = 0; y < n; ++y) {
      row_zero = row_zero && r.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == 0;
      col_zero = col_zero && r.mul(static_cast<Elem>(y), static_cast<Elem>(x)) == 0;
    }
    if (row_zero) return {false, static_cast<Elem>(x), VanishingSide::kLeft};
    if (col_zero) return {false, static_cast<Elem>(x), VanishingSide::kRight};
  }
  return {};
}

/// Componentwise product; the pair (i, j) is encoded as i * |s| + j.
inline FiniteRing direct_product(const FiniteRing& r, const FiniteRing& s) {
  const std::size_t nr = r.order(), ns = s.order(), n = nr * ns;
  if (n > kMaxOrder) throw Error(ErrorCode::kBoundExceeded, "product order too large");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ai = static_cast<Elem>(a / ns), aj = static_cast<Elem>(a % ns);
    for (std::size_t b = 0; b < n; ++b) {
      const auto bi = static_cast<Elem>(b / ns), bj = static_cast<Elem>(b % ns);
      add[a * n + b] = static_cast<Elem>(r.add(ai, bi) * ns + s.add(aj, bj));
      mul[a * n + b] = static_cast<Elem>(r.mul(ai, bi) * ns + s.mul(aj, bj));
    }
  }
  return FiniteRing::from_tables_unchecked(n, std::move(add), std::move(mul));
}

/// Relabels a ring: element x of r becomes perm[x]. perm must fix 0.
inline FiniteRing relabel(const FiniteRing& r, std::span<const Elem> perm) {
  const std::size_t n = r.order();
  if (perm.size() != n || perm[0] != 0) throw Error(ErrorCode::kShape, "bad relabeling");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      add[perm[a] * n + perm[b]] = perm[r.add(ea, eb)];
      mul[perm[a] * n + perm[b]] = perm[r.mul(ea, eb)];
    }
  return FiniteRing::from_tables_unchecked(n, std::move(add), std::move(mul));
}

}  // namespace fring
