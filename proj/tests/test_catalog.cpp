#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <set>
#include <vector>

#include "fring/fring.hpp"
#include "oracles.hpp"

using namespace fring;
namespace fs = std::filesystem;

namespace {

using Key = std::pair<std::vector<Elem>, std::vector<Elem>>;

Key key_of(const FiniteRing& r) {
  return {{r.add_table().begin(), r.add_table().end()}, {r.mul_table().begin(), r.mul_table().end()}};
}

std::set<Key> forms(const std::vector<FiniteRing>& rings) {
  std::set<Key> out;
  for (const auto& r : rings) out.insert(key_of(canonical_form(r).ring));
  return out;
}

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("fring_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(AbelianGroups, Counts) {
  const std::map<std::size_t, std::size_t> expected{{1, 1},  {2, 1}, {3, 1}, {4, 2}, {6, 1},
                                                    {8, 3},  {9, 2}, {12, 2}, {16, 5}};
  for (auto [n, k] : expected) EXPECT_EQ(enumerate_abelian_groups(n).size(), k) << n;
  const auto g8 = enumerate_abelian_groups(8);
  EXPECT_EQ(g8[0].factors, (std::vector<std::size_t>{8}));
  EXPECT_EQ(g8[1].factors, (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(g8[2].factors, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_THROW(enumerate_abelian_groups(17), Error);
}

TEST(AbelianGroups, PairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto gs = enumerate_abelian_groups(n);
    for (const auto& g : gs) {
      EXPECT_EQ(g.ring.order(), n);
      std::size_t prod = 1;
      for (auto f : g.factors) prod *= f;
      EXPECT_EQ(prod, n);
    }
    // element-order multisets separate abelian groups
    std::set<std::vector<std::size_t>> profiles;
    for (const auto& g : gs) {
      std::vector<std::size_t> orders;
      for (std::size_t x = 0; x < n; ++x) orders.push_back(g.ring.additive_order(Elem(x)));
      std::sort(orders.begin(), orders.end());
      profiles.insert(orders);
    }
    EXPECT_EQ(profiles.size(), gs.size());
  }
}

TEST(Generate, Counts) {
  const std::vector<std::size_t> expected{1, 2, 2, 11, 2, 4, 2, 52};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(generate_ring_forms(n).size(), expected[n - 1]);
  EXPECT_THROW(generate_ring_forms(9), Error);
}

TEST(Generate, PrimeOrders) {
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    const auto rs = generate_ring_forms(p);
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(forms(rs), forms({cyclic_ring(p), zero_ring(p)}));
  }
}

TEST(Generate, MatchesRawTableOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto raw = oracle::all_rings(n);
    std::vector<FiniteRing> oracle_rings;
    for (const auto& r : raw) {
      std::vector<Elem> a(r.add.begin(), r.add.end()), m(r.mul.begin(), r.mul.end());
      oracle_rings.push_back(make_ring(n, a, m));
    }
    const auto generated = generate_ring_forms(n);
    EXPECT_EQ(oracle_rings.size(), generated.size()) << n;
    EXPECT_EQ(forms(oracle_rings), forms(generated)) << n;
  }
}

TEST(Generate, SortedCanonicalDistinct) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto rs = generate_ring_forms(n);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      EXPECT_EQ(canonical_form(rs[i]).ring, rs[i]);
      if (i) { EXPECT_LT(key_of(rs[i - 1]), key_of(rs[i])); }
    }
  }
}

TEST(Generate, ThreadCountDoesNotMatter) {
  const auto a = generate_ring_forms(8, 8, 1);
  const auto b = generate_ring_forms(8, 8, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Annotate, Examples) {
  const auto z2 = annotate_entry(cyclic_ring(2));
  EXPECT_TRUE(z2.props.idempotent && z2.props.unital && z2.props.non_degenerate);
  ASSERT_EQ(z2.ideals.size(), 2u);
  EXPECT_TRUE(z2.canonical);
  EXPECT_EQ(z2.id.substr(0, 3), "r2-");

  const auto zero = annotate_entry(zero_ring(2));
  EXPECT_FALSE(zero.props.idempotent || zero.props.unital || zero.props.non_degenerate);

  const auto k4 = annotate_entry(direct_product(cyclic_ring(2), cyclic_ring(2)));
  EXPECT_TRUE(k4.props.idempotent && k4.props.unital && k4.props.non_degenerate);
  EXPECT_EQ(k4.ideals.size(), 4u);
  EXPECT_EQ(format_flags(k4.props), "idempotent,unital,nondegenerate");
  EXPECT_EQ(format_flags(zero.props), "-");

  // the id depends on the canonical tables only
  EXPECT_EQ(annotate_entry(relabel(k4.ring, std::vector<Elem>{0, 3, 1, 2})).id, k4.id);
}

TEST(Catalog, EntriesAreValidAndDistinct) {
  const auto cat = Catalog::generate({});
  std::map<std::size_t, std::size_t> per_order;
  std::set<std::string> ids;
  for (const auto& e : cat.entries()) {
    ++per_order[e.ring.order()];
    EXPECT_TRUE(ids.insert(e.id).second);
    const auto again = annotate_entry(e.ring);
    EXPECT_EQ(again.props, e.props);
    EXPECT_EQ(again.ideals.size(), e.ideals.size());
    if (e.canonical) { EXPECT_EQ(canonical_form(e.ring).ring, e.ring); }
  }
  EXPECT_EQ(per_order[8], 52u);
  EXPECT_GE(per_order[16], 9u);
  // order-16 entries are pairwise non-isomorphic
  std::vector<FiniteRing> big;
  for (const auto& e : cat.entries())
    if (e.ring.order() == 16) big.push_back(e.ring);
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) EXPECT_FALSE(find_isomorphism(big[i], big[j]));
}

TEST(Catalog, ClosureSmoke) {
  const auto cat = Catalog::generate({});
  for (const auto& e : cat.entries()) {
    if (e.ring.order() > 8) continue;
    EXPECT_NO_THROW(dorroh_extension(e.ring));
    if (e.props.non_degenerate) { EXPECT_NO_THROW(multiplier_ring(e.ring)); }
  }
}

TEST(Catalog, SaveLoadAndAdd) {
  const auto dir = temp_dir("catalog");
  Catalog::Options opt;
  opt.max_order = 4;
  opt.with_constructions = false;
  const auto cat = Catalog::generate(opt);
  cat.save(dir);
  const auto loaded = Catalog::load(dir);
  ASSERT_EQ(loaded.entries().size(), cat.entries().size());
  EXPECT_EQ(loaded.index_text(), cat.index_text());

  auto grown = loaded;
  const auto [i, added] = grown.add(relabel(cyclic_ring(4), std::vector<Elem>{0, 3, 2, 1}));
  EXPECT_FALSE(added);
  EXPECT_EQ(grown.entries()[i].ring, canonical_form(cyclic_ring(4)).ring);

  const auto [j, added_m2] = grown.add(matrix_ring(2, 2));
  EXPECT_TRUE(added_m2);
  EXPECT_FALSE(grown.entries()[j].canonical);
  EXPECT_EQ(grown.entries()[j].id.substr(0, 4), "x16-");
  const auto [k, again] = grown.add(relabel(matrix_ring(2, 2), [] {
    std::vector<Elem> p(16);
    for (Elem x = 0; x < 16; ++x) p[x] = static_cast<Elem>(x == 0 ? 0 : 16 - x);
    return p;
  }()));
  EXPECT_FALSE(again);
  EXPECT_EQ(k, j);
  grown.save(dir);
  EXPECT_EQ(Catalog::load(dir).entries().size(), cat.entries().size() + 1);
  fs::remove_all(dir);
}

TEST(Catalog, IndexFormat) {
  Catalog::Options opt;
  opt.max_order = 2;
  opt.with_constructions = false;
  const auto text = Catalog::generate(opt).index_text();
  std::istringstream in(text);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    std::istringstream ls(line);
    std::string id, flags, file, extra;
    std::size_t order;
    ASSERT_TRUE(ls >> id >> order >> flags >> file);
    EXPECT_FALSE(ls >> extra);
    EXPECT_EQ(file, id + ".ring");
  }
  EXPECT_EQ(lines, 3u);
}

TEST(Catalog, GenerationBound) {
  Catalog::Options opt;
  opt.max_order = 9;
  EXPECT_THROW(Catalog::generate(opt), Error);
}
