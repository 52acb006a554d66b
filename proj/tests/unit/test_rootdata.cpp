#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qconj/error.hpp"
#include "qconj/rootdata.hpp"
#include "qconj/scalar.hpp"
#include "qconj/weight_module.hpp"

using namespace qconj;

TEST(RootSystem, RhoAndPairing) {
  const RootSystem rs(4);
  EXPECT_EQ(rs.rho(), (Weight{3, 2, 1, 0}));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(pairing(rs.rho(), rs.simple_root(i)), 1);
  EXPECT_EQ(rs.positive_roots().size(), 6u);
  EXPECT_EQ(rs.root_content(Root{0, 2}), (Content{1, 1, 0}));
  EXPECT_EQ(rs.eps_content(2), (Content{1, 1, 0}));
  EXPECT_EQ(weight_at(Weight{4, 2, 0}, Content{1, 1}), (Weight{3, 2, 1}));
}

TEST(Kostant, MatchesMultisetEnumeration) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& d : enumerate_contents(n, n == 4 ? 5 : 7))
      ASSERT_EQ(kostant_partition_count(n, d), oracle::kostant(n, d)) << format_list(d);
  EXPECT_EQ(kostant_partition_count(3, {1, 1}), 2u);
  EXPECT_EQ(kostant_partition_count(3, {2, 1}), 2u);
  EXPECT_EQ(kostant_partition_count(2, {2}), 1u);
}

TEST(Admissible, Examples) {
  const BlockStructure b21({2, 1});
  EXPECT_TRUE(is_admissible(Permutation::identity(3), b21));
  EXPECT_FALSE(is_admissible(Permutation::from_one_based({2, 1, 3}), b21));
  EXPECT_EQ(enumerate_admissible(b21).size(), 3u);
  EXPECT_EQ(enumerate_admissible(BlockStructure({1, 1})).size(), 2u);
  EXPECT_EQ(enumerate_admissible(BlockStructure({1, 1, 1})).size(), 6u);
}

TEST(Admissible, MatchesScanOfSymmetricGroup) {
  for (const auto& mult : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}, {2, 1, 1}, {1, 2, 1}}) {
    const BlockStructure b(mult);
    const auto perms = enumerate_admissible(b);
    const auto scan = oracle::admissible_by_scan(mult);
    ASSERT_EQ(perms.size(), scan.size());
    ASSERT_EQ(perms.size(), multinomial(b));
    for (std::size_t i = 0; i < perms.size(); ++i) EXPECT_EQ(perms[i].images(), scan[i]);
  }
}

TEST(Admissible, NonLeviPlacements) {
  const BlockStructure b({2, 2});
  const auto perms = enumerate_admissible(b);
  ASSERT_EQ(perms.size(), 6u);
  int non_levi = 0;
  bool found = false;
  for (const auto& s : perms) {
    if (!is_levi_placement(s, b)) ++non_levi;
    if (s.one_based() == std::vector<int>{1, 3, 2, 4}) {
      found = true;
      const Root r = s.apply(Root{0, 1});
      EXPECT_EQ(r.i, 0);
      EXPECT_EQ(r.j, 2);
      EXPECT_FALSE(is_levi_placement(s, b));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(non_levi, 4);
}

TEST(ShiftedAction, Examples) {
  const Weight lam{7, 3};
  EXPECT_EQ(shifted_action(Permutation::identity(2), lam), lam);
  EXPECT_EQ(shifted_action(Permutation::from_one_based({2, 1}), lam), (Weight{2, 8}));
}

TEST(ShiftedAction, PermutesHatX) {
  const Weight lam{5, 5, 0, -2};
  for (const auto& s : enumerate_admissible(BlockStructure({2, 1, 1}))) {
    const Weight sl = shifted_action(s, lam);
    for (int i = 0; i < 4; ++i) {
      const int j = s.inverse()(i);
      EXPECT_EQ(sl[static_cast<std::size_t>(i)] - i, lam[static_cast<std::size_t>(j)] - j);
    }
  }
}

TEST(ShiftedAction, IsAnAction) {
  const Weight lam{1, -4, 6};
  const auto all = oracle::admissible_by_scan({1, 1, 1});
  for (const auto& a : all)
    for (const auto& b : all) {
      const Permutation pa(a);
      const Permutation pb(b);
      EXPECT_EQ(shifted_action(pa * pb, lam), shifted_action(pa, shifted_action(pb, lam)));
    }
}

TEST(BlockStructure, Starts) {
  const BlockStructure b({2, 1, 3});
  EXPECT_EQ(b.starts(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(b.levi_simple_roots(), (std::vector<int>{0, 3, 4}));
  EXPECT_TRUE(b.precedes(3, 5));
  EXPECT_FALSE(b.precedes(1, 2));
  EXPECT_EQ(sorted_block_starts(Permutation::from_one_based({1, 3, 2, 4, 5, 6}), b), (std::vector<int>{0, 1, 3}));
}

TEST(Regularity, Checks) {
  const BlockStructure b({2, 1});
  EXPECT_TRUE(is_block_constant({5, 5, 0}, b));
  EXPECT_FALSE(is_block_constant({5, 4, 0}, b));
  EXPECT_TRUE(is_levi_regular({5, 5, 0}, b));
  EXPECT_FALSE(is_levi_regular({5, 5, 5}, b));
  EXPECT_TRUE(is_orbit_regular({5, 5, 0}, b));
  EXPECT_FALSE(is_orbit_regular({0, 0, 2}, b));
}

TEST(Permutation, Basics) {
  const Permutation s = Permutation::from_one_based({1, 3, 2, 4});
  EXPECT_EQ(s.to_string(), "(1,3,2,4)");
  EXPECT_EQ(s * s.inverse(), Permutation::identity(4));
  bool neg = false;
  s.apply(Root{1, 2}, &neg);
  EXPECT_TRUE(neg);
  EXPECT_THROW(Permutation::from_one_based({1, 1, 2}), InvalidArgument);
}
