#pragma once

/**
 * @file catalog.hpp
 * @brief Small rings up to isomorphism.
 *
 * Rings of order <= 8 are enumerated exhaustively: for every abelian group of
 * the order, the products of basis generators are chosen one at a time,
 * associativity on generator triples is checked as soon as it can be
 * evaluated, and complete structures are deduplicated by canonical form.
 * Larger rings enter only as named constructions.
 */

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fring/canonical.hpp"
#include "fring/constructions.hpp"
#include "fring/error.hpp"
#include "fring/extensions.hpp"
#include "fring/io.hpp"
#include "fring/morphism.hpp"
#include "fring/parallel.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring {

inline constexpr std::size_t kDefaultGenerationBound = 8;
inline constexpr std::size_t kMaxGroupOrder = 16;

struct AbelianGroup {
  /// Prime-power cyclic factors; element index is the mixed-radix number of
  /// its coordinates with the first factor most significant.
  std::vector<std::size_t> factors;
  /// The group as a ring with zero multiplication.
  FiniteRing ring;

  std::vector<std::size_t> coordinates(Elem x) const {
    std::vector<std::size_t> c(factors.size());
    std::size_t v = x;
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = v % factors[i];
      v /= factors[i];
    }
    return c;
  }
  Elem basis(std::size_t i) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) idx = idx * factors[j] + (j == i ? 1 : 0);
    return static_cast<Elem>(idx);
  }
};

namespace detail {

inline void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline FiniteRing group_from_factors(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  std::vector<Elem> add(n * n), mul(n * n, 0);
  auto coords = [&](std::size_t x) {
    std::vector<std::size_t> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = x % factors[i];
      x /= factors[i];
    }
    return c;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = coords(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = coords(b);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        idx = idx * factors[i] + (ca[i] + cb[i]) % factors[i];
      add[a * n + b] = static_cast<Elem>(idx);
    }
  }
  return make_ring(n, std::move(add), std::move(mul));
}

}  // namespace detail

/// One group per isomorphism class, from the partitions of each prime's
/// multiplicity. Order 8 gives Z8, Z4 x Z2, Z2 x Z2 x Z2 in that order.
inline std::vector<AbelianGroup> enumerate_abelian_groups(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::kShape, "order must be positive");
  if (order > kMaxGroupOrder)
    throw Error(ErrorCode::kBoundExceeded, "abelian groups of order " + std::to_string(order));
  // per prime: list of factor lists
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  std::size_t rest = order;
  for (std::size_t p = 2; p <= rest; ++p) {
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    detail::partitions(e, e, cur, parts);
    std::vector<std::vector<std::size_t>> options;
    for (const auto& part : parts) {
      std::vector<std::size_t> f;
      for (auto k : part) {
        std::size_t q = 1;
        for (std::size_t i = 0; i < k; ++i) q *= p;
        f.push_back(q);
      }
      options.push_back(std::move(f));
    }
    per_prime.push_back(std::move(options));
  }
  std::vector<std::vector<std::size_t>> combos{{}};
  for (const auto& options : per_prime) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : combos)
      for (const auto& o : options) {
        auto merged = c;
        merged.insert(merged.end(), o.begin(), o.end());
        next.push_back(std::move(merged));
      }
    combos = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (auto& f : combos) out.push_back({f, detail::group_from_factors(f)});
  return out;
}

namespace detail {

/// Backtracking over products of basis generators for one group.
class StructureConstantSearch {
 public:
  explicit StructureConstantSearch(const AbelianGroup& g) : g_(g), t_(g.factors.size()) {
    const auto& r = g.ring;
    for (std::size_t x = 0; x < r.order(); ++x) coords_.push_back(g.coordinates(static_cast<Elem>(x)));
    for (std::size_t i = 0; i < t_; ++i) basis_.push_back(g.basis(i));
    // pairs ordered by (max(i,j), i, j) so small generator sets close early
    for (std::size_t m = 0; m < t_; ++m)
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j)
          if (std::max(i, j) == m) vars_.emplace_back(i, j);
    for (auto [i, j] : vars_) {
      std::vector<Elem> dom;
      const std::size_t lim = std::gcd(g.factors[i], g.factors[j]);
      for (std::size_t x = 0; x < r.order(); ++x)
        if (lim % r.additive_order(static_cast<Elem>(x)) == 0) dom.push_back(static_cast<Elem>(x));
      domains_.push_back(std::move(dom));
    }
  }

  std::size_t first_branch_count() const { return vars_.empty() ? 1 : domains_[0].size(); }

  /// Complete associative structures whose first variable takes the
  /// `branch`-th value of its domain.
  std::vector<FiniteRing> run_branch(std::size_t branch) {
    out_.clear();
    prod_.assign(t_ * t_, kUnset);
    if (vars_.empty()) {
      emit();
      return std::move(out_);
    }
    assign(0, domains_[0][branch]);
    return std::move(out_);
  }

 private:
  static constexpr int kUnset = -1;

  int& at(std::size_t i, std::size_t j) { return prod_[i * t_ + j]; }

  // sum_l c_l * P(l, k) (right) or sum_l c_l * P(i, l) (left); nullopt if unknown
  std::optional<Elem> combine(const std::vector<std::size_t>& c, std::size_t fixed, bool right) {
    const auto& r = g_.ring;
    Elem acc = 0;
    for (std::size_t l = 0; l < t_; ++l) {
      if (c[l] == 0) continue;
      const int p = right ? at(l, fixed) : at(fixed, l);
      if (p == kUnset) return std::nullopt;
      acc = r.add(acc, r.scale(static_cast<std::int64_t>(c[l]), static_cast<Elem>(p)));
    }
    return acc;
  }

  bool consistent() {
    for (std::size_t i = 0; i < t_; ++i)
      for (std::size_t j = 0; j < t_; ++j) {
        if (at(i, j) == kUnset) continue;
        for (std::size_t k = 0; k < t_; ++k) {
          if (at(j, k) == kUnset) continue;
          const auto lhs = combine(coords_[at(i, j)], k, true);   // (g_i g_j) g_k
          if (!lhs) continue;
          const auto rhs = combine(coords_[at(j, k)], i, false);  // g_i (g_j g_k)
          if (!rhs) continue;
          if (*lhs != *rhs) return false;
        }
      }
    return true;
  }

  void assign(std::size_t v, Elem value) {
    auto [i, j] = vars_[v];
    at(i, j) = value;
    if (consistent()) {
      if (v + 1 == vars_.size()) emit();
      else
        for (Elem next : domains_[v + 1]) assign(v + 1, next);
    }
    at(i, j) = kUnset;
  }

  void emit() {
    const auto& r = g_.ring;
    const std::size_t n = r.order();
    std::vector<Elem> mul(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Elem acc = 0;
        for (std::size_t i = 0; i < t_; ++i) {
          if (coords_[x][i] == 0) continue;
          for (std::size_t j = 0; j < t_; ++j) {
            if (coords_[y][j] == 0) continue;
            acc = r.add(acc, r.scale(static_cast<std::int64_t>(coords_[x][i] * coords_[y][j]),
                                     static_cast<Elem>(at(i, j))));
          }
        }
        mul[x * n + y] = acc;
      }
    std::vector<Elem> add(r.add_table().begin(), r.add_table().end());
    out_.push_back(make_ring(n, std::move(add), std::move(mul)));
  }

  const AbelianGroup& g_;
  std::size_t t_;
  std::vector<std::vector<std::size_t>> coords_;
  std::vector<Elem> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
  std::vector<std::vector<Elem>> domains_;
  std::vector<int> prod_;
  std::vector<FiniteRing> out_;
};

using TableKey = std::pair<std::vector<Elem>, std::vector<Elem>>;

inline TableKey key_of(const FiniteRing& r) {
  return {std::vector<Elem>(r.add_table().begin(), r.add_table().end()),
          std::vector<Elem>(r.mul_table().begin(), r.mul_table().end())};
}

}  // namespace detail

/// Every associative structure-constant choice on every group of the order,
/// before deduplication. Exposed for cross-checks.
inline std::vector<FiniteRing> raw_structures(std::size_t order, std::size_t threads = 1) {
  std::vector<std::pair<std::size_t, std::size_t>> jobs;  // (group, branch)
  const auto groups = enumerate_abelian_groups(order);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    detail::StructureConstantSearch s(groups[g]);
    for (std::size_t b = 0; b < s.first_branch_count(); ++b) jobs.emplace_back(g, b);
  }
  auto parts = parallel_map(jobs.size(), threads, [&](std::size_t k) {
    detail::StructureConstantSearch s(groups[jobs[k].first]);
    return s.run_branch(jobs[k].second);
  });
  std::vector<FiniteRing> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

/// All rings of the given order up to isomorphism, as canonical forms sorted
/// by (addition table, multiplication table).
inline std::vector<FiniteRing> generate_ring_forms(std::size_t order,
                                                   std::size_t bound = kDefaultGenerationBound,
                                                   std::size_t threads = 1) {
  if (order > bound)
    throw Error(ErrorCode::kBoundExceeded, "generation of order " + std::to_string(order) +
                                               " exceeds bound " + std::to_string(bound));
  const auto raw = raw_structures(order, threads);
  auto forms = parallel_map(raw.size(), threads, [&](std::size_t i) {
    return canonical_form(raw[i], bound).ring;
  });
  std::map<detail::TableKey, FiniteRing> unique;
  for (auto& f : forms) unique.emplace(detail::key_of(f), f);
  std::vector<FiniteRing> out;
  for (auto& [k, r] : unique) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Entries
// ---------------------------------------------------------------------------

struct RingProps {
  bool idempotent = false;
  bool unital = false;
  bool non_degenerate = false;

  friend bool operator==(const RingProps&, const RingProps&) = default;
};

struct CatalogEntry {
  FiniteRing ring;
  RingProps props;
  std::vector<Subset> ideals;
  std::string id;
  /// ring is its own canonical form (order within the canonicalization bound)
  bool canonical = false;
};

inline std::string format_flags(const RingProps& p) {
  std::string s;
  auto add = [&](const char* f) {
    if (!s.empty()) s += ',';
    s += f;
  };
  if (p.idempotent) add("idempotent");
  if (p.unital) add("unital");
  if (p.non_degenerate) add("nondegenerate");
  return s.empty() ? "-" : s;
}

inline std::string ring_id(const FiniteRing& r, bool canonical) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(table_hash(r)));
  return (canonical ? "r" : "x") + std::to_string(r.order()) + "-" + hex;
}

/// Flags, ideal list and id. Rings within the canonicalization bound are
/// replaced by their canonical form first.
inline CatalogEntry annotate_entry(const FiniteRing& ring,
                                   std::size_t canon_bound = kDefaultCanonBound,
                                   std::size_t ideal_bound = kDefaultIdealBound) {
  CatalogEntry e{ring, {}, {}, {}, false};
  if (ring.order() <= canon_bound) {
    e.ring = canonical_form(ring, canon_bound).ring;
    e.canonical = true;
  }
  e.props.idempotent = is_idempotent(e.ring);
  e.props.unital = e.ring.unit().has_value();
  e.props.non_degenerate = is_non_degenerate(e.ring).non_degenerate;
  e.ideals = enumerate_ideals(e.ring, ideal_bound);
  e.id = ring_id(e.ring, e.canonical);
  return e;
}

/// Isomorphism invariants used to avoid pointless isomorphism searches.
inline std::vector<std::size_t> ring_signature(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::size_t idem = 0, square_zero = 0, central = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Elem>(x);
    idem += r.mul(e, e) == e;
    square_zero += r.mul(e, e) == 0;
    bool c = true;
    for (std::size_t y = 0; y < n && c; ++y)
      c = r.mul(e, static_cast<Elem>(y)) == r.mul(static_cast<Elem>(y), e);
    central += c;
  }
  const auto whole = Subset::full(r);
  std::vector<std::size_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = r.additive_order(static_cast<Elem>(x));
  std::sort(orders.begin(), orders.end());
  std::vector<std::size_t> sig{n,           r.additive_exponent(), r.unit().has_value() ? 1u : 0u,
                               idem,        square_zero,           central,
                               subset_product(whole, whole).size()};
  sig.insert(sig.end(), orders.begin(), orders.end());
  return sig;
}

/// Named rings of order 16 used as additional ambients.
inline std::vector<std::pair<std::string, FiniteRing>> named_constructions() {
  const auto z2 = cyclic_ring(2);
  const auto z4 = cyclic_ring(4);
  const auto f4 = binary_field(2);
  return {
      {"M2(Z2)", matrix_ring(2, 2)},
      {"GF(16)", binary_field(4)},
      {"GF(4)xGF(4)", direct_product(f4, f4)},
      {"Z2^4", direct_product(direct_product(z2, z2), direct_product(z2, z2))},
      {"Z4xZ4", direct_product(z4, z4)},
      {"Z16", cyclic_ring(16)},
      {"GF(8)xZ2", direct_product(binary_field(3), z2)},
      {"GF(4)xZ4", direct_product(f4, z4)},
      {"T2(Z2)xZ2", direct_product(upper_triangular_ring(2, 2), z2)},
  };
}

class Catalog {
 public:
  struct Options {
    std::size_t max_order = kDefaultGenerationBound;
    std::size_t generation_bound = kDefaultGenerationBound;
    bool with_constructions = true;
    std::size_t threads = 1;
    std::size_t canon_bound = kDefaultCanonBound;
    std::size_t hom_bound = kDefaultHomBound;
  };

  /// Enumerated rings of order 1..max_order; optionally the named order-16
  /// constructions and the Dorroh extensions of enumerated rings that land at
  /// orders 9..16.
  static Catalog generate(const Options& opt) {
    if (opt.max_order > opt.generation_bound)
      throw Error(ErrorCode::kBoundExceeded, "catalog max order " + std::to_string(opt.max_order) +
                                                 " exceeds generation bound " +
                                                 std::to_string(opt.generation_bound));
    Catalog c;
    c.canon_bound_ = opt.canon_bound;
    c.hom_bound_ = opt.hom_bound;
    for (std::size_t n = 1; n <= opt.max_order; ++n)
      for (auto& r : generate_ring_forms(n, opt.generation_bound, opt.threads))
        c.insert_unchecked(annotate_entry(r, c.canon_bound_));
    if (opt.with_constructions) {
      for (auto& [name, r] : named_constructions()) c.add(r);
      const auto base = c.entries_;
      for (const auto& e : base) {
        const std::size_t dn = e.ring.order() * e.ring.additive_exponent();
        if (dn > opt.max_order && dn <= 16) c.add(dorroh_extension(e.ring).ring);
      }
    }
    c.sort();
    return c;
  }

  /// Adds a ring unless an isomorphic one is present; returns the entry index
  /// and whether it was new.
  std::pair<std::size_t, bool> add(const FiniteRing& r) {
    if (r.order() <= canon_bound_) {
      auto e = annotate_entry(r, canon_bound_);
      for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].canonical && entries_[i].ring == e.ring) return {i, false};
      const auto id = e.id;
      entries_.push_back(std::move(e));
      sort();
      return {index_of_id(id), true};
    }
    const auto sig = ring_signature(r);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& e = entries_[i];
      if (e.ring.order() != r.order() || ring_signature(e.ring) != sig) continue;
      if (find_isomorphism(r, e.ring, canon_bound_, hom_bound_)) return {i, false};
    }
    auto e = annotate_entry(r, canon_bound_);
    const auto id = e.id;
    entries_.push_back(std::move(e));
    sort();
    return {index_of_id(id), true};
  }

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  std::vector<FiniteRing> rings(std::size_t max_order = static_cast<std::size_t>(-1)) const {
    std::vector<FiniteRing> out;
    for (const auto& e : entries_)
      if (e.ring.order() <= max_order) out.push_back(e.ring);
    return out;
  }

  std::string index_text() const {
    std::string s;
    for (const auto& e : entries_)
      s += e.id + " " + std::to_string(e.ring.order()) + " " + format_flags(e.props) + " " +
           e.id + ".ring\n";
    return s;
  }

  void save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& e : entries_) write_file((dir / (e.id + ".ring")).string(), format_ring(e.ring));
    write_file((dir / "index").string(), index_text());
  }

  /// Reads an index and its ring files. Entries are re-annotated and must
  /// reproduce their recorded ids and flags.
  static Catalog load(const std::filesystem::path& dir,
                      std::size_t canon_bound = kDefaultCanonBound,
                      std::size_t hom_bound = kDefaultHomBound) {
    Catalog c;
    c.canon_bound_ = canon_bound;
    c.hom_bound_ = hom_bound;
    std::istringstream in(read_file((dir / "index").string()));
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string id, flags, file;
      std::size_t order = 0;
      if (!(ls >> id)) continue;
      if (!(ls >> order >> flags >> file)) throw Error(ErrorCode::kParse, "bad index line: " + line);
      const auto ring = parse_valid_ring(read_file((dir / file).string()));
      if (ring.order() != order) throw Error(ErrorCode::kParse, "order mismatch for " + id);
      auto e = annotate_entry(ring, canon_bound);
      if (!e.canonical) e.id = id;  // non-canonical ids record the stored tables
      if (e.id != id || format_flags(e.props) != flags)
        throw Error(ErrorCode::kParse, "index entry " + id + " does not match its ring file");
      c.entries_.push_back(std::move(e));
    }
    c.sort();
    return c;
  }

 private:
  void insert_unchecked(CatalogEntry e) { entries_.push_back(std::move(e)); }

  void sort() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
      if (a.ring.order() != b.ring.order()) return a.ring.order() < b.ring.order();
      return detail::key_of(a.ring) < detail::key_of(b.ring);
    });
  }

  std::size_t index_of_id(const std::string& id) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].id == id) return i;
    return entries_.size() - 1;
  }

  std::vector<CatalogEntry> entries_;
  std::size_t canon_bound_ = kDefaultCanonBound;
  std::size_t hom_bound_ = kDefaultHomBound;
};

}  // namespace fring
