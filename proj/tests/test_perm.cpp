#include "g1/catalog.hpp"
#include "g1/group_spec.hpp"
#include "g1/invariants.hpp"
#include "g1/perm_group.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using g1::Elem;
using g1::Permutation;
using g1::PermGroup;

namespace {

Permutation cyc(std::size_t degree,
                std::initializer_list<std::initializer_list<std::size_t>> c) {
  return Permutation::from_cycles(degree, c);
}

oracle::Table table_of(const PermGroup &g) {
  std::vector<oracle::Img> gens;
  for (const auto &p : g.generators())
    gens.push_back(oracle::img(p));
  return oracle::Table(oracle::closure(g.degree(), gens));
}

// Membership vector of h in the oracle table's indexing.
std::vector<bool> mask(const oracle::Table &t, const g1::ElementSet &h) {
  std::vector<bool> in(t.size(), false);
  for (Elem e : h.members()) {
    auto im = oracle::img(h.group().element(e));
    auto it = std::lower_bound(t.elems.begin(), t.elems.end(), im);
    in[it - t.elems.begin()] = true;
  }
  return in;
}

Elem index_of(const PermGroup &g, const Permutation &p) {
  auto e = g.index_of(p);
  EXPECT_TRUE(e.has_value());
  return e.value_or(0);
}

} // namespace

TEST(Permutation, CompositionActsOnTheRight) {
  const auto a = cyc(3, {{0, 1}});
  const auto b = cyc(3, {{1, 2}});
  // x^(ab) = (x^a)^b: 0 -> 1 -> 2.
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).to_cycle_string(), "(1 3 2)");
  EXPECT_EQ(a.inverse(), a);
  EXPECT_TRUE((a * a).is_identity());
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation(std::vector<g1::Point>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(cyc(3, {{0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(cyc(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(PermGroup::from_generators(4, {cyc(3, {{0, 1}})}),
               std::invalid_argument);
}

TEST(Permutation, ElementOrder) {
  EXPECT_EQ(g1::element_order(Permutation::identity(5)), 1u);
  EXPECT_EQ(g1::element_order(cyc(5, {{0, 1}, {2, 3, 4}})), 6u);
  EXPECT_EQ(g1::element_order(cyc(5, {{0, 1, 2, 3, 4}})), 5u);
}

TEST(PermGroup, OrderExamples) {
  const auto s5 = PermGroup::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})});
  EXPECT_EQ(s5.order(), 120u);
  const auto triv = PermGroup::from_generators(3, {});
  EXPECT_EQ(triv.order(), 1u);
  const auto a5 = PermGroup::from_generators(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})});
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_EQ(oracle::closure(5, {oracle::img(cyc(5, {{0, 1, 2}})),
                                oracle::img(cyc(5, {{2, 3, 4}}))})
                .size(),
            60u);
}

TEST(PermGroup, TableIsIndexedFromIdentity) {
  const auto g = g1::symmetric_group(4);
  ASSERT_TRUE(g.has_table());
  EXPECT_TRUE(g.element(0).is_identity());
  for (Elem a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.index_of(g.element(a)), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
    for (Elem b = 0; b < g.size(); ++b)
      ASSERT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
  }
}

TEST(PermGroup, OrderCapAborts) {
  g1::GroupOptions opts;
  opts.order_cap = 1000;
  EXPECT_THROW(g1::symmetric_group(8, opts), g1::ResourceBoundError);
}

TEST(PermGroup, LargeGroupsHaveNoTable) {
  const auto g = g1::symmetric_group(8);
  EXPECT_EQ(g.order(), 40320u);
  EXPECT_FALSE(g.has_table());
  EXPECT_THROW(g1::whole_group(g), g1::ResourceBoundError);
  EXPECT_TRUE(g.chain().contains(cyc(8, {{0, 7}})));
}

TEST(Subgroups, GeneratedExamples) {
  const auto s3 = g1::symmetric_group(3);
  const Elem t = index_of(s3, cyc(3, {{0, 1}}));
  const Elem r = index_of(s3, cyc(3, {{0, 1, 2}}));
  std::vector<Elem> none{0}, one{t}, two{t, r};
  EXPECT_EQ(g1::subgroup_generated(s3, none).size(), 1u);
  EXPECT_EQ(g1::subgroup_generated(s3, one).size(), 2u);
  EXPECT_EQ(g1::subgroup_generated(s3, two).size(), 6u);
  std::vector<Elem> bad{99};
  EXPECT_THROW(g1::subgroup_generated(s3, bad), std::out_of_range);
}

TEST(Subgroups, CommutatorExamples) {
  const auto s3 = g1::symmetric_group(3);
  const auto whole = g1::whole_group(s3);
  EXPECT_TRUE(g1::commutator_subgroup(whole, g1::trivial_subgroup(s3)).is_trivial());
  EXPECT_EQ(g1::commutator_subgroup(whole, whole).size(), 3u);
  const auto a5 = g1::alternating_group(5);
  EXPECT_EQ(g1::commutator_subgroup(g1::whole_group(a5), g1::whole_group(a5)).size(), 60u);
}

TEST(Subgroups, CommutatorMatchesBruteForce) {
  for (const char *name : {"S4", "D12", "Q8", "A4", "SL(2,3)", "C3 x S3", "D8 x C3"}) {
    const auto g = g1::build_group(g1::parse_group_spec(name));
    const auto t = table_of(g);
    const auto whole = g1::whole_group(g);
    std::vector<bool> all(t.size(), true);
    const auto d = g1::commutator_subgroup(whole, whole);
    EXPECT_EQ(mask(t, d), oracle::commutator(t, all, all)) << name;
    const auto d2 = g1::commutator_subgroup(whole, d);
    EXPECT_EQ(mask(t, d2), oracle::commutator(t, all, mask(t, d))) << name;
  }
}

TEST(Series, SolvableExamples) {
  EXPECT_TRUE(g1::is_solvable(g1::symmetric_group(4)));
  EXPECT_FALSE(g1::is_solvable(g1::alternating_group(5)));
  EXPECT_TRUE(g1::is_solvable(g1::cyclic_group(12)));
  std::vector<std::size_t> orders;
  for (const auto &h : g1::derived_series(g1::symmetric_group(4)))
    orders.push_back(h.size());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));
}

TEST(Series, NilpotentExamples) {
  EXPECT_TRUE(g1::is_nilpotent(g1::quaternion_group()));
  EXPECT_FALSE(g1::is_nilpotent(g1::symmetric_group(3)));
  EXPECT_TRUE(g1::is_nilpotent(g1::cyclic_group(6)));
  EXPECT_TRUE(g1::is_nilpotent(g1::dihedral_group(16)));
  EXPECT_FALSE(g1::is_nilpotent(g1::dihedral_group(12)));
}

TEST(Quotient, Examples) {
  const auto s4 = g1::symmetric_group(4);
  const auto v4 = g1::derived_series(s4)[2];
  ASSERT_EQ(v4.size(), 4u);
  const auto q = g1::quotient_group(s4, v4);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_EQ(g1::fingerprint(g1::build_report("q", q)),
            g1::fingerprint(g1::build_report("S3", g1::symmetric_group(3))));

  const auto a4 = g1::alternating_group(4);
  const auto q2 = g1::quotient_group(a4, g1::derived_series(a4)[1]);
  EXPECT_EQ(q2.order(), 3u);
  EXPECT_TRUE(g1::is_abelian(g1::whole_group(q2)));

  const auto same = g1::quotient_group(s4, g1::trivial_subgroup(s4));
  EXPECT_EQ(same.order(), 24u);
  EXPECT_EQ(g1::quotient_group(s4, g1::whole_group(s4)).order(), 1u);
}

TEST(Quotient, RejectsNonNormal) {
  const auto s3 = g1::symmetric_group(3);
  std::vector<Elem> t{index_of(s3, cyc(3, {{0, 1}}))};
  try {
    g1::quotient_group(s3, g1::subgroup_generated(s3, t));
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument &e) {
    EXPECT_NE(std::string(e.what()).find("not normal"), std::string::npos);
  }
}

TEST(Quotient, CosetCountMatchesOracle) {
  for (const char *name : {"S4", "D12", "Q8", "SL(2,3)", "C5 x S3"}) {
    const auto g = g1::build_group(g1::parse_group_spec(name));
    const auto t = table_of(g);
    for (const auto &n : g1::derived_series(g)) {
      EXPECT_EQ(g1::quotient_group(g, n).order(), oracle::coset_count(t, mask(t, n)))
          << name;
    }
  }
}

TEST(ElementClasses, Examples) {
  auto sizes = [](const PermGroup &g) {
    std::vector<std::size_t> s;
    for (const auto &c : g1::conjugacy_classes_of_elements(g))
      s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  EXPECT_EQ(sizes(g1::cyclic_group(4)), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(sizes(g1::symmetric_group(3)), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(sizes(g1::alternating_group(5)), (std::vector<std::size_t>{1, 12, 12, 15, 20}));
  for (const char *name : {"S4", "Q8", "SL(2,3)", "D20", "A5"}) {
    const auto g = g1::build_group(g1::parse_group_spec(name));
    EXPECT_EQ(sizes(g), oracle::element_class_sizes(table_of(g))) << name;
  }
}

// Sweeps over every catalog group.

TEST(CatalogProperties, ChainOrderMatchesClosure) {
  const auto cat = g1::Catalog::default_catalog();
  for (const auto &e : cat.entries()) {
    const auto g = g1::build_group(e.spec);
    std::vector<oracle::Img> gens;
    for (const auto &p : g.generators())
      gens.push_back(oracle::img(p));
    ASSERT_EQ(g.order(), oracle::closure(g.degree(), gens).size()) << e.name;
    ASSERT_EQ(g.order(), e.order) << e.name;
  }
}

TEST(CatalogProperties, ElementOrdersDivideGroupOrder) {
  const auto cat = g1::Catalog::default_catalog();
  for (const auto &e : cat.entries()) {
    const auto g = g1::build_group(e.spec);
    for (Elem x = 0; x < g.size(); ++x) {
      ASSERT_EQ(g.order() % g.order_of(x), 0u) << e.name;
      ASSERT_EQ(g.order_of(x), g1::element_order(g.element(x))) << e.name;
    }
  }
}

TEST(CatalogProperties, QuotientsAndSeries) {
  const auto cat = g1::Catalog::default_catalog();
  for (std::size_t i : cat.up_to(200)) {
    const auto g = g1::build_group(cat[i].spec);
    const auto series = g1::derived_series(g);
    for (std::size_t k = 1; k < series.size(); ++k) {
      EXPECT_LT(series[k].size(), series[k - 1].size()) << cat[i].name;
      EXPECT_TRUE(series[k].is_subset_of(series[k - 1]));
    }
    for (const auto &n : series) {
      ASSERT_EQ(g.order() % n.size(), 0u);
      const auto q = g1::quotient_group(g, n);
      EXPECT_EQ(q.order() * n.size(), g.order()) << cat[i].name;
      if (g1::is_solvable(g)) {
        EXPECT_TRUE(g1::is_solvable(q)) << cat[i].name;
        EXPECT_TRUE(g1::is_solvable(g1::subgroup_as_group(n))) << cat[i].name;
      }
    }
  }
}
