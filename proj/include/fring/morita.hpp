#pragma once

/**
 * @file morita.hpp
 * @brief Enlargements, joint enlargements, and the verification harnesses
 *        built on them.
 *
 * T is an enlargement of its subring S when T = TST and S = STS. Two
 * idempotent rings are treated as Morita equivalent exactly when some ring
 * is an enlargement of (isomorphic copies of) both. The search below is
 * bounded by a candidate list: a hit is a proof, a miss is only evidence.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fring/canonical.hpp"
#include "fring/error.hpp"
#include "fring/morphism.hpp"
#include "fring/parallel.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring {

struct EnlargementWitness {
  FiniteRing ambient;
  Subset inner;
  bool is_subring = false;
  bool tst_equals_t = false;
  bool sts_equals_s = false;

  bool valid() const noexcept { return is_subring && tst_equals_t && sts_equals_s; }
};

inline EnlargementWitness is_enlargement(const FiniteRing& t, const Subset& s) {
  if (!(s.parent() == t)) throw Error(ErrorCode::kParentMismatch, "subset is not over T");
  const auto whole = Subset::full(t);
  EnlargementWitness w{t, s};
  w.is_subring = classify_subset(s).is_subring;
  w.tst_equals_t = subset_product(whole, s, whole) == whole;
  w.sts_equals_s = subset_product(s, whole, s) == s;
  return w;
}

struct JointEnlargement {
  FiniteRing ambient;
  Subset copy_a;
  Subset copy_b;
  RingHom iso_a;  ///< A -> induced_ring(copy_a).ring
  RingHom iso_b;  ///< B -> induced_ring(copy_b).ring
};

inline std::optional<JointEnlargement> is_joint_enlargement(
    const FiniteRing& t, const Subset& copy_a, const Subset& copy_b, const FiniteRing& a,
    const FiniteRing& b, std::size_t canon_bound = kDefaultCanonBound,
    std::size_t hom_bound = kDefaultHomBound) {
  if (!is_enlargement(t, copy_a).valid() || !is_enlargement(t, copy_b).valid())
    return std::nullopt;
  auto iso_a = find_isomorphism(a, induced_ring(copy_a).ring, canon_bound, hom_bound);
  if (!iso_a) return std::nullopt;
  auto iso_b = find_isomorphism(b, induced_ring(copy_b).ring, canon_bound, hom_bound);
  if (!iso_b) return std::nullopt;
  return JointEnlargement{t, copy_a, copy_b, std::move(*iso_a), std::move(*iso_b)};
}

struct SearchOptions {
  std::size_t max_order = 16;
  std::size_t threads = 1;
  std::size_t canon_bound = kDefaultCanonBound;
  std::size_t hom_bound = kDefaultHomBound;
};

/// The subrings S of one candidate T for which T is an enlargement of S,
/// with their induced rings (and canonical forms where within bound).
class EnlargementProfile {
 public:
  struct Slot {
    Subset copy;
    InducedRing induced;
    std::optional<FiniteRing> canonical;
  };

  static EnlargementProfile build(const FiniteRing& t,
                                  std::size_t canon_bound = kDefaultCanonBound,
                                  std::size_t max_order = static_cast<std::size_t>(-1)) {
    EnlargementProfile p;
    p.ring_ = t;
    if (t.order() > max_order) return p;
    for (auto& s : enumerate_subrings(t)) {
      if (!is_enlargement(t, s).valid()) continue;
      auto induced = induced_ring(s);
      std::optional<FiniteRing> canon;
      if (induced.ring.order() <= canon_bound)
        canon = canonical_form(induced.ring, canon_bound).ring;
      p.slots_.push_back({std::move(s), std::move(induced), std::move(canon)});
    }
    return p;
  }

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Slot>& slots() const noexcept { return slots_; }

 private:
  FiniteRing ring_;
  std::vector<Slot> slots_;
};

struct SearchResult {
  std::optional<JointEnlargement> found;
  std::size_t candidate_index = 0;  ///< meaningful when found
  std::size_t candidates_scanned = 0;
  std::size_t bound = 0;
  std::vector<std::string> skipped;

  /// A witness proves Morita equivalence; its absence is bounded evidence.
  bool is_proof() const noexcept { return found.has_value(); }
};

namespace detail {

struct Target {
  FiniteRing ring;
  std::optional<FiniteRing> canonical;
};

inline Target make_target(const FiniteRing& r, std::size_t canon_bound) {
  Target t{r, std::nullopt};
  if (r.order() <= canon_bound) t.canonical = canonical_form(r, canon_bound).ring;
  return t;
}

// Cheap invariants first, then canonical comparison or direct search.
inline bool slot_matches(const EnlargementProfile::Slot& slot, const Target& target,
                         const SearchOptions& opt) {
  const auto& ind = slot.induced.ring;
  if (ind.order() != target.ring.order()) return false;
  if (ind.additive_exponent() != target.ring.additive_exponent()) return false;
  if (target.canonical && slot.canonical) return *target.canonical == *slot.canonical;
  return find_isomorphism(target.ring, ind, opt.canon_bound, opt.hom_bound).has_value();
}

struct CandidateHit {
  Subset copy_a;
  Subset copy_b;
};

struct CandidateOutcome {
  std::optional<CandidateHit> hit;
  std::optional<std::string> skipped;
};

inline CandidateOutcome scan_profile(const EnlargementProfile& p, const Target& a, const Target& b,
                                     const SearchOptions& opt) {
  try {
    const Subset* copy_a = nullptr;
    for (const auto& slot : p.slots())
      if (slot_matches(slot, a, opt)) {
        copy_a = &slot.copy;
        break;
      }
    if (!copy_a) return {};
    for (const auto& slot : p.slots())
      if (slot_matches(slot, b, opt)) return {CandidateHit{*copy_a, slot.copy}, std::nullopt};
    return {};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBoundExceeded) throw;
    return {std::nullopt, std::string(e.what())};
  }
}

}  // namespace detail

/// First joint enlargement of A and B among prepared candidate profiles, in
/// candidate order; within a candidate the copies are the first matching
/// subrings in ascending mask order.
inline SearchResult search_joint_enlargement(const FiniteRing& a, const FiniteRing& b,
                                             std::span<const EnlargementProfile> profiles,
                                             const SearchOptions& opt = {}) {
  SearchResult result;
  result.bound = opt.max_order;
  const auto ta = detail::make_target(a, opt.canon_bound);
  const auto tb = detail::make_target(b, opt.canon_bound);

  auto outcomes = parallel_map(profiles.size(), opt.threads, [&](std::size_t i) {
    const auto& p = profiles[i];
    if (p.ring().order() > opt.max_order)
      return detail::CandidateOutcome{std::nullopt, "candidate " + std::to_string(i) +
                                                        " of order " +
                                                        std::to_string(p.ring().order()) +
                                                        " exceeds max order"};
    if (p.ring().order() < a.order() || p.ring().order() < b.order())
      return detail::CandidateOutcome{};
    return detail::scan_profile(p, ta, tb, opt);
  });

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ++result.candidates_scanned;
    if (outcomes[i].skipped) result.skipped.push_back(*outcomes[i].skipped);
    if (outcomes[i].hit) {
      const auto& hit = *outcomes[i].hit;
      auto je = is_joint_enlargement(profiles[i].ring(), hit.copy_a, hit.copy_b, a, b,
                                     opt.canon_bound, opt.hom_bound);
      if (!je)
        throw Error(ErrorCode::kFatalInconsistency, "search hit does not replay");
      result.found = std::move(je);
      result.candidate_index = i;
      break;
    }
  }
  return result;
}

/// Profiles for every candidate, in candidate order. Candidates above
/// opt.max_order get an empty profile; the search reports them as skipped.
inline std::vector<EnlargementProfile> build_profiles(std::span<const FiniteRing> candidates,
                                                      const SearchOptions& opt = {}) {
  return parallel_map(candidates.size(), opt.threads, [&](std::size_t i) {
    return EnlargementProfile::build(candidates[i], opt.canon_bound, opt.max_order);
  });
}

inline SearchResult search_joint_enlargement(const FiniteRing& a, const FiniteRing& b,
                                             std::span<const FiniteRing> candidates,
                                             const SearchOptions& opt = {}) {
  const auto profiles = build_profiles(candidates, opt);
  return search_joint_enlargement(a, b, profiles, opt);
}

// ---------------------------------------------------------------------------
// Harnesses
// ---------------------------------------------------------------------------

struct IdealProductReport {
  bool is_ideal = false;
  bool is_idempotent = false;
  bool preconditions = false;
  Subset rsr;
  bool rsr_within_s = false;   ///< RSR is a subset of S
  bool sss_within_rsr = false;  ///< SSS is a subset of RSR
  bool equal = false;
};

/// For S an idempotent ideal of R: RSR = S, checked through both inclusions.
/// When the preconditions hold and the identity fails, throws
/// kFatalInconsistency.
inline IdealProductReport verify_lemma_ideal_product(const FiniteRing& r, const Subset& s) {
  if (!(s.parent() == r)) throw Error(ErrorCode::kParentMismatch, "S is not a subset of R");
  const auto whole = Subset::full(r);
  const auto cls = classify_subset(s);
  IdealProductReport rep{cls.is_ideal, false, false, subset_product(whole, s, whole)};
  rep.is_idempotent = cls.is_subring && subset_product(s, s) == s;
  rep.preconditions = rep.is_ideal && rep.is_idempotent;
  rep.rsr_within_s = rep.rsr.is_subset_of(s);
  rep.sss_within_rsr = subset_product(s, s, s).is_subset_of(rep.rsr);
  rep.equal = rep.rsr == s;
  if (rep.preconditions && !(rep.equal && rep.rsr_within_s && rep.sss_within_rsr))
    throw Error(ErrorCode::kFatalInconsistency, "RSR != S for an idempotent ideal S");
  return rep;
}

struct ChainLink {
  std::string expression;
  Subset value;
  bool equals_previous = true;
};

struct ChainReport {
  std::vector<ChainLink> links;
  bool all_links_equal = false;
  bool r_equals_s = false;
};

/// Hypotheses for replaying the chain inside T: R a subring of T, S an ideal
/// of R, both idempotent, T = TST and R = RTR. Returns the failed ones.
inline std::vector<std::string> chain_hypothesis_failures(const FiniteRing& t, const Subset& r,
                                                          const Subset& s) {
  std::vector<std::string> failed;
  if (!(r.parent() == t) || !(s.parent() == t))
    throw Error(ErrorCode::kParentMismatch, "R and S must be subsets of T");
  const auto whole = Subset::full(t);
  const auto rc = classify_subset(r);
  const auto sc = classify_subset(s);
  if (!rc.is_subring) failed.emplace_back("R is a subring of T");
  bool s_ideal = sc.is_subring && s.is_subset_of(r);
  if (s_ideal && rc.is_subring) {
    const auto& rm = r.mask();
    const auto& sm = s.mask();
    s_ideal = detail::products_of(t, rm, sm).is_subset_of(sm) &&
              detail::products_of(t, sm, rm).is_subset_of(sm);
  }
  if (!s_ideal) failed.emplace_back("S is an ideal of R");
  if (!rc.is_subring || subset_product(r, r) != r) failed.emplace_back("R is idempotent");
  if (!sc.is_subring || subset_product(s, s) != s) failed.emplace_back("S is idempotent");
  if (subset_product(whole, s, whole) != whole) failed.emplace_back("T = TST");
  if (subset_product(r, whole, r) != r) failed.emplace_back("R = RTR");
  return failed;
}

/// Evaluates R = RTR = R(TST)R = RT(RSR)TR = (RTR)S(RTR) = RSR = S link by
/// link. Throws kPreconditionFail naming the failed hypotheses, and
/// kFatalInconsistency if a link breaks anyway.
inline ChainReport verify_chain(const FiniteRing& t, const Subset& r, const Subset& s) {
  if (auto failed = chain_hypothesis_failures(t, r, s); !failed.empty()) {
    std::string msg;
    for (const auto& f : failed) msg += (msg.empty() ? "" : "; ") + f;
    throw Error(ErrorCode::kPreconditionFail, msg);
  }
  const auto T = Subset::full(t);
  const auto rtr = subset_product(r, T, r);
  const auto tst = subset_product(T, s, T);
  const auto rsr = subset_product(r, s, r);

  ChainReport rep;
  auto push = [&](std::string expr, Subset value) {
    const bool eq = rep.links.empty() || rep.links.back().value == value;
    rep.links.push_back({std::move(expr), std::move(value), eq});
  };
  push("R", r);
  push("RTR", rtr);
  push("R(TST)R", subset_product(r, tst, r));
  push("RT(RSR)TR", subset_product(subset_product(subset_product(r, T), rsr), T, r));
  push("(RTR)S(RTR)", subset_product(rtr, s, rtr));
  push("RSR", rsr);
  push("S", s);
  rep.all_links_equal = true;
  for (const auto& l : rep.links) rep.all_links_equal = rep.all_links_equal && l.equals_previous;
  rep.r_equals_s = r == s;
  if (!rep.all_links_equal || !rep.r_equals_s)
    throw Error(ErrorCode::kFatalInconsistency, "chain breaks although its hypotheses hold");
  return rep;
}

enum class TheoremVerdict {
  kNoneFound,        ///< no joint enlargement among the candidates
  kFoundConsistent,  ///< found, and the preconditions or properness fail
  kFatal,            ///< found for an idempotent proper ideal: a bug
  kNotApplicable,    ///< S is not a subring, nothing to search
};

inline std::string_view to_string(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::kNoneFound: return "NONE_FOUND";
    case TheoremVerdict::kFoundConsistent: return "FOUND_CONSISTENT";
    case TheoremVerdict::kFatal: return "FATAL";
    case TheoremVerdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

struct TheoremReport {
  bool r_idempotent = false;
  bool s_ideal = false;
  bool s_idempotent = false;
  bool s_proper = false;
  bool s_zero = false;
  bool preconditions = false;
  SearchResult search;
  TheoremVerdict verdict = TheoremVerdict::kNotApplicable;
};

/// Runs the joint-enlargement search for (R, S) where S is a candidate
/// idempotent proper ideal of R.
inline TheoremReport verify_theorem_instance(const FiniteRing& r, const Subset& s,
                                             std::span<const EnlargementProfile> profiles,
                                             const SearchOptions& opt = {}) {
  if (!(s.parent() == r)) throw Error(ErrorCode::kParentMismatch, "S is not a subset of R");
  TheoremReport rep;
  const auto cls = classify_subset(s);
  rep.r_idempotent = is_idempotent(r);
  rep.s_ideal = cls.is_ideal;
  rep.s_idempotent = cls.is_subring && subset_product(s, s) == s;
  rep.s_proper = !s.is_full();
  rep.s_zero = s.size() == 1;
  rep.preconditions = rep.r_idempotent && rep.s_ideal && rep.s_idempotent;
  if (!cls.is_subring) return rep;
  rep.search = search_joint_enlargement(r, induced_ring(s).ring, profiles, opt);
  if (!rep.search.found) rep.verdict = TheoremVerdict::kNoneFound;
  else if (rep.preconditions && rep.s_proper) rep.verdict = TheoremVerdict::kFatal;
  else rep.verdict = TheoremVerdict::kFoundConsistent;
  return rep;
}

inline TheoremReport verify_theorem_instance(const FiniteRing& r, const Subset& s,
                                             std::span<const FiniteRing> candidates,
                                             const SearchOptions& opt = {}) {
  const auto profiles = build_profiles(candidates, opt);
  return verify_theorem_instance(r, s, profiles, opt);
}

}  // namespace fring
