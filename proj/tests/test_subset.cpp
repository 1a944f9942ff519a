#include <gtest/gtest.h>

#include <vector>

#include "fring/fring.hpp"

using namespace fring;

namespace {

FiniteRing z2() { return cyclic_ring(2); }
FiniteRing k4() { return direct_product(z2(), z2()); }

// every subset of a small ring, as masks
std::vector<Subset> all_subsets(const FiniteRing& r) {
  std::vector<Subset> out;
  for (std::size_t m = 0; m < (std::size_t{1} << r.order()); ++m) {
    Bitmask b;
    for (std::size_t i = 0; i < r.order(); ++i)
      if (m >> i & 1) b.set(i);
    out.emplace_back(r, b);
  }
  return out;
}

bool naive_subgroup(const Subset& a) {
  const auto& r = a.parent();
  if (!a.contains(0)) return false;
  for (Elem x : a.elements()) {
    if (!a.contains(r.neg(x))) return false;
    for (Elem y : a.elements())
      if (!a.contains(r.add(x, y))) return false;
  }
  return true;
}

}  // namespace

TEST(AdditiveClosure, Examples) {
  const auto z8 = cyclic_ring(8);
  EXPECT_EQ(additive_closure(Subset::of(z8, {})), Subset::of(z8, {0}));
  EXPECT_EQ(additive_closure(Subset::of(z8, {2})), Subset::of(z8, {0, 2, 4, 6}));
  for (const auto& h : enumerate_subgroups(z8)) EXPECT_EQ(additive_closure(h), h);
}

TEST(AdditiveClosure, IsSmallestSubgroup) {
  for (const auto& r : {k4(), cyclic_ring(4), cyclic_ring(6)})
    for (const auto& a : all_subsets(r)) {
      const auto c = additive_closure(a);
      EXPECT_TRUE(naive_subgroup(c));
      EXPECT_TRUE(a.is_subset_of(c));
      for (const auto& h : enumerate_subgroups(r))
        if (a.is_subset_of(h)) { EXPECT_TRUE(c.is_subset_of(h)); }
    }
}

TEST(SubsetProduct, Examples) {
  const auto z4 = cyclic_ring(4);
  for (const auto& b : all_subsets(z4))
    EXPECT_EQ(subset_product(Subset::of(z4, {0}), b), Subset::of(z4, {0}));
  EXPECT_EQ(subset_product(Subset::of(z4, {0, 2}), Subset::of(z4, {0, 2})), Subset::of(z4, {0}));
  const auto r = k4();
  const auto s = Subset::of(r, {0, 2});  // Z2 x {0}
  const auto whole = Subset::full(r);
  EXPECT_EQ(subset_product(whole, s, whole), s);
}

TEST(SubsetProduct, ParentMismatch) {
  try {
    subset_product(Subset::full(z2()), Subset::full(cyclic_ring(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParentMismatch);
  }
}

TEST(SubsetProduct, AssociativeAndMonotone) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& r : generate_ring_forms(n)) {
      const auto subs = enumerate_subgroups(r);
      for (const auto& a : subs)
        for (const auto& b : subs) {
          const auto ab = subset_product(a, b);
          for (const auto& c : subs) {
            EXPECT_EQ(subset_product(ab, c), subset_product(a, subset_product(b, c)));
            if (a.is_subset_of(c)) { EXPECT_TRUE(ab.is_subset_of(subset_product(c, b))); }
          }
        }
    }
}

TEST(SubsetProduct, AssociativeOnArbitrarySubsets) {
  for (const auto& r : {k4(), cyclic_ring(4), upper_triangular_ring(2, 2)}) {
    if (r.order() > 4) continue;
    const auto subs = all_subsets(r);
    for (const auto& a : subs)
      for (const auto& b : subs)
        for (const auto& c : subs)
          EXPECT_EQ(subset_product(subset_product(a, b), c),
                    subset_product(a, subset_product(b, c)));
  }
}

TEST(Classify, Examples) {
  const auto r = k4();
  for (const auto& s : {Subset::full(r), Subset::of(r, {0}), Subset::of(r, {0, 2})}) {
    const auto c = classify_subset(s);
    EXPECT_TRUE(c.is_additive_subgroup && c.is_subring && c.is_left_ideal && c.is_right_ideal &&
                c.is_ideal);
  }
  EXPECT_FALSE(classify_subset(Subset::of(r, {0, 1, 2})).is_additive_subgroup);
  // the diagonal {(0,0),(1,1)} is a subring but not an ideal
  const auto diag = classify_subset(Subset::of(r, {0, 3}));
  EXPECT_TRUE(diag.is_subring);
  EXPECT_FALSE(diag.is_ideal);
}

TEST(Classify, OneSidedIdealsInTriangularRing) {
  const auto t = upper_triangular_ring(2, 2);
  std::size_t left_only = 0, right_only = 0;
  for (const auto& s : all_subsets(t)) {
    const auto c = classify_subset(s);
    EXPECT_EQ(c.is_ideal, c.is_left_ideal && c.is_right_ideal && c.is_additive_subgroup);
    if (c.is_subring) { EXPECT_TRUE(c.is_additive_subgroup); }
    left_only += c.is_left_ideal && !c.is_right_ideal;
    right_only += c.is_right_ideal && !c.is_left_ideal;
  }
  EXPECT_GT(left_only, 0u);
  EXPECT_GT(right_only, 0u);
}

TEST(Idempotent, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_idempotent(cyclic_ring(n)));
  EXPECT_FALSE(is_idempotent(zero_ring(2)));
  EXPECT_FALSE(is_idempotent(zero_ring(5)));
  const auto z8 = cyclic_ring(8);
  EXPECT_FALSE(is_idempotent(Subset::of(z8, {0, 2, 4, 6})));
  EXPECT_EQ(subset_product(Subset::of(z8, {0, 2, 4, 6}), Subset::of(z8, {0, 2, 4, 6})),
            Subset::of(z8, {0, 4}));
  try {
    is_idempotent(Subset::of(z8, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSubring);
  }
}

TEST(Ideals, Examples) {
  const auto z2i = enumerate_ideals(z2());
  ASSERT_EQ(z2i.size(), 2u);
  EXPECT_EQ(z2i[0], Subset::of(z2(), {0}));
  EXPECT_EQ(z2i[1], Subset::full(z2()));

  const auto m2 = enumerate_ideals(matrix_ring(2, 2));
  ASSERT_EQ(m2.size(), 2u);
  EXPECT_EQ(m2[0].size(), 1u);
  EXPECT_TRUE(m2[1].is_full());

  const auto r = k4();
  const auto ki = enumerate_ideals(r);
  ASSERT_EQ(ki.size(), 4u);
  EXPECT_EQ(ki[0], Subset::of(r, {0}));
  EXPECT_EQ(ki[1], Subset::of(r, {0, 1}));
  EXPECT_EQ(ki[2], Subset::of(r, {0, 2}));
  EXPECT_EQ(ki[3], Subset::full(r));
}

TEST(Ideals, BoundExceeded) {
  try {
    enumerate_ideals(matrix_ring(2, 2), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
}

TEST(Ideals, MatchNaiveScanAndCloseUnderIntersection) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& r : generate_ring_forms(n)) {
      const auto ideals = enumerate_ideals(r);
      ASSERT_FALSE(ideals.empty());
      EXPECT_EQ(ideals.front().size(), 1u);
      EXPECT_TRUE(ideals.back().is_full());
      for (std::size_t i = 1; i < ideals.size(); ++i) EXPECT_LT(ideals[i - 1].mask(), ideals[i].mask());
      std::vector<Subset> naive;
      for (const auto& s : all_subsets(r)) {
        if (!naive_subgroup(s)) continue;
        bool ideal = true;
        for (Elem x : s.elements())
          for (std::size_t y = 0; y < r.order(); ++y)
            ideal = ideal && s.contains(r.mul(x, Elem(y))) && s.contains(r.mul(Elem(y), x));
        if (ideal) naive.push_back(s);
      }
      EXPECT_EQ(naive.size(), ideals.size());
      for (const auto& a : ideals)
        for (const auto& b : ideals) {
          const auto c = intersection(a, b);
          EXPECT_NE(std::find(ideals.begin(), ideals.end(), c), ideals.end());
        }
    }
}

TEST(InducedRing, Examples) {
  const auto r = k4();
  const auto full = induced_ring(Subset::full(r));
  EXPECT_EQ(full.ring, r);
  EXPECT_EQ(full.embedding, (std::vector<Elem>{0, 1, 2, 3}));

  const auto first = induced_ring(Subset::of(r, {0, 2}));
  EXPECT_TRUE(find_isomorphism(first.ring, z2()));
  EXPECT_TRUE(check_hom(first.embedding, first.ring, r).hom);

  const auto z4 = cyclic_ring(4);
  const auto half = induced_ring(Subset::of(z4, {0, 2}));
  EXPECT_EQ(half.ring, zero_ring(2));
  EXPECT_THROW(induced_ring(Subset::of(z4, {0, 1})), Error);
}

TEST(Decompose, Examples) {
  const auto z4 = cyclic_ring(4);
  EXPECT_EQ(decompose_element(Subset::full(z4), 0), ProductWitness{});
  const auto w = decompose_element(Subset::full(z4), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(replay_witness(z4, *w), 3);
  EXPECT_EQ(*w, (ProductWitness{{1, 3}}));
  EXPECT_FALSE(decompose_element(Subset::of(z4, {0, 2}), 2));
}

TEST(Decompose, AgreesWithProductAndReplays) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& r : generate_ring_forms(n))
      for (const auto& a : enumerate_subrings(r)) {
        const auto aa = subset_product(a, a);
        for (std::size_t x = 0; x < r.order(); ++x) {
          const auto w = decompose_element(a, Elem(x));
          EXPECT_EQ(w.has_value(), aa.contains(Elem(x)));
          if (!w) continue;
          EXPECT_EQ(replay_witness(r, *w), x);
          for (auto [p, q] : *w) EXPECT_TRUE(a.contains(p) && a.contains(q));
        }
      }
}

TEST(SubsetFormat, RoundTrip) {
  const auto r = k4();
  EXPECT_EQ(format_subset(Subset::of(r, {0, 1})), "subset 2: 0 1");
  EXPECT_EQ(format_subset(Subset::of(r, {})), "subset 0:");
  EXPECT_EQ(parse_subset("subset 2: 0 1", r), Subset::of(r, {0, 1}));
  EXPECT_EQ(parse_subset(format_subset(Subset::full(r)), r), Subset::full(r));
  EXPECT_THROW(parse_subset("subset 2: 1 0", r), Error);
  EXPECT_THROW(parse_subset("subset 3: 0 1", r), Error);
  EXPECT_THROW(parse_subset("subset 1: 9", r), Error);
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(minimal_generating_set(cyclic_ring(8)), (std::vector<Elem>{1}));
  EXPECT_EQ(minimal_generating_set(k4()), (std::vector<Elem>{1, 2}));
  EXPECT_EQ(minimal_generating_set(matrix_ring(2, 2)).size(), 4u);
  EXPECT_TRUE(minimal_generating_set(FiniteRing{}).empty());
}
