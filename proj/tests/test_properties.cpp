#include <gtest/gtest.h>

#include <random>

#include "hgroup.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hgroup;

namespace {

std::vector<Index> random_subset(std::size_t n, std::size_t k, std::mt19937& rng) {
  auto p = oracle::random_permutation(n, rng);
  p.resize(k);
  return {p.begin(), p.end()};
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& g : catalog_groups())
    if (g.order() <= 24) out.push_back(g);
  return out;
}

}  // namespace

TEST(Transversals, CosetAndFactorizationTestsAgreeOnRandomSubsets) {
  std::mt19937 rng(20240611);
  std::size_t positives = 0, total = 0;
  for (const auto& g : small_groups()) {
    const auto t = support::table_of(g);
    for (const auto& h : all_subgroups(g)) {
      const std::size_t index = g.order() / h.order();
      for (int trial = 0; trial < 40; ++trial) {
        // Half the trials draw one element per coset so positives occur.
        std::vector<Index> m;
        if (trial % 2) {
          for (const auto& c : right_cosets(g, h)) m.push_back(c[rng() % c.size()]);
          std::shuffle(m.begin(), m.end(), rng);
        } else {
          const std::size_t k = 1 + rng() % std::min<std::size_t>(g.order(), index + 1);
          m = random_subset(g.order(), k, rng);
        }
        const auto v = is_right_transversal(g, h, m);
        EXPECT_EQ(v.rt, v.rcs);
        const std::vector<std::size_t> hm(h.members().begin(), h.members().end());
        const std::vector<std::size_t> mm(m.begin(), m.end());
        EXPECT_EQ(v.ok, oracle::is_transversal(t, hm, mm)) << g.name();
        positives += v.ok;
        ++total;
      }
    }
  }
  EXPECT_GT(positives, total / 3);
  EXPECT_LT(positives, total);
}

TEST(Transversals, EnumerationCountAndValidity) {
  for (const auto& g : small_groups()) {
    if (g.order() > 12) continue;
    for (const auto& h : all_subgroups(g)) {
      const std::size_t index = g.order() / h.order();
      const auto expected = oracle::ipow(h.order(), index);
      ASSERT_EQ(count_transversals(g, h), expected);
      if (expected > 5000) continue;
      std::set<std::set<Index>> distinct;
      const auto all = enumerate_transversals(g, h);
      ASSERT_EQ(all.size(), expected) << g.name();
      for (const auto& m : all) {
        EXPECT_TRUE(is_right_transversal(g, h, m).ok);
        distinct.insert({m.begin(), m.end()});
      }
      EXPECT_EQ(distinct.size(), expected);
    }
  }
}

TEST(Groups, RelabelingPreservesValidityAndCensus) {
  std::mt19937 rng(7);
  for (const auto& g : small_groups()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = oracle::random_permutation(g.order(), rng);
      const auto t = oracle::relabel(support::table_of(g), p);
      std::vector<Index> flat;
      for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
      std::vector<std::string> names;
      for (std::size_t i = 0; i < g.order(); ++i) names.push_back("e" + std::to_string(i));
      const auto h = build_group_from_table("relabeled", names, flat);
      EXPECT_EQ(h.order_census(), g.order_census()) << g.name();
      EXPECT_EQ(h.identity(), p[g.identity()]);
      EXPECT_EQ(h.is_abelian(), g.is_abelian());
      EXPECT_EQ(h.order_census(), oracle::order_census(t));
    }
  }
}

TEST(Hypergroups, RandomPerturbationsMatchTheOracle) {
  std::mt19937 rng(99);
  const auto cat = default_catalog();
  std::size_t broken = 0, trials = 0;
  for (const auto& base : cat.hypergroups) {
    const std::size_t m = base.base_size(), h = base.group.order();
    if (m * m * m > 4096 || h > 24) continue;
    for (int trial = 0; trial < 12; ++trial) {
      auto d = base;
      const int table = static_cast<int>(rng() % 4);
      std::vector<Index>* v = table == 0 ? &d.phi : table == 1 ? &d.psi : table == 2 ? &d.xi : &d.lam;
      const std::size_t range = (table == 1 || table == 3) ? h : m;
      if (v->empty() || range < 2) continue;
      (*v)[rng() % v->size()] = rng() % range;

      const auto val = validate_hypergroup(d);
      const auto report = val.hypergroup ? full_report(d) : val.report;
      const auto oracle_bad = oracle::failing_axioms(support::to_raw(d));
      const auto defining_bad = support::defining_only(oracle_bad);
      std::set<std::string> lib_defining;
      for (Axiom a : kDefiningAxioms)
        if (report[a].failed()) lib_defining.insert(to_string(a));
      ASSERT_EQ(lib_defining, defining_bad) << base.name;
      ++trials;
      if (val.hypergroup) {
        EXPECT_TRUE(verify_derived(*val.hypergroup).all_passed(kDerivedAxioms)) << base.name;
        EXPECT_TRUE(std::none_of(oracle_bad.begin(), oracle_bad.end(),
                                 [](const std::string& s) { return s[0] == 'A' && (s.size() == 3 || s[1] >= '6'); }))
            << base.name;
      } else {
        ++broken;
      }
    }
  }
  EXPECT_GT(trials, 300u);
  EXPECT_GT(broken, trials / 4);
}

TEST(Hypergroups, LeftNeutralAndDivisionLaws) {
  const auto cat = default_catalog();
  for (const auto& d : cat.hypergroups) {
    const auto k = make_hypergroup(d);
    const std::size_t m = k.base_size();
    std::size_t neutrals = 0;
    for (Index c = 0; c < m; ++c) {
      bool ok = true;
      for (Index a = 0; a < m && ok; ++a) ok = k.xi(c, a) == a;
      neutrals += ok;
    }
    EXPECT_EQ(neutrals, 1u) << d.name;
    for (Index b = 0; b < m; ++b)
      for (Index a = 0; a < m; ++a) EXPECT_EQ(k.xi(k.left_divide(b, a), a), b) << d.name;
    // theta * psi(o, alpha) * theta^-1 == alpha
    const auto& g = k.group();
    for (Index al = 0; al < g.order(); ++al)
      EXPECT_EQ(g.mul(g.mul(k.theta(), k.psi(k.o(), al)), g.inverse(k.theta())), al) << d.name;
  }
}

TEST(Triples, FactorizationMultipliesBack) {
  std::mt19937 rng(3);
  for (const auto& t : catalog_triples()) {
    const auto& g = t.group();
    for (int i = 0; i < 10; ++i) {
      const Index x = rng() % g.order();
      const auto f = t.factorize(x);
      EXPECT_EQ(g.mul(f.alpha, f.a), x);
      EXPECT_TRUE(t.subgroup().contains(f.alpha));
      EXPECT_EQ(t.transversal()[f.a_pos], f.a);
    }
  }
}

TEST(ExactProduct, RandomWordsAssociateAndDivide) {
  std::mt19937 rng(11);
  for (const auto& d : default_catalog().hypergroups) {
    const auto k = make_hypergroup(d);
    const auto e = exact_product(k);
    const auto& g = e.group();
    for (int i = 0; i < 30; ++i) {
      const Index x = rng() % g.order(), y = rng() % g.order(), z = rng() % g.order();
      EXPECT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
      const Index q = exact_left_divide(e, x, y);
      EXPECT_EQ(g.mul(q, y), x);
    }
  }
}
