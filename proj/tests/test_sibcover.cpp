#include <gtest/gtest.h>

#include "packcover/core/generators.hpp"
#include "packcover/core/io.hpp"
#include "packcover/core/verify.hpp"
#include "packcover/sibcover.hpp"
#include "packcover/testing/oracles.hpp"

using namespace packcover;

namespace {

SibInstance pqrs() { return parse_sib_instance("id a b c d\np 1 2 5 5\nq 3 4 5 5\nr 1 1 5 5\ns 5 5 5 5\n"); }

SibInstance identical(int n) {
  std::vector<std::vector<AllelePair>> rows(static_cast<std::size_t>(n), {{1, 2}});
  return SibInstance(rows, 1);
}

SibInstance all_distinct(int n) {
  std::vector<std::vector<AllelePair>> rows;
  for (int i = 0; i < n; ++i) rows.push_back({{2 * i + 1, 2 * i + 2}});
  return SibInstance(rows, 1);
}

int oracle_cover(const SibInstance& s, int k, int a) {
  return oracle::min_sibling_cover(s.size(), a, [&](const std::vector<int>& g) { return oracle::group_feasible(s, g, k); });
}

}  // namespace

TEST(Threshold, OneBigFamilyPairs) {
  auto s = identical(7);
  auto c = solve_threshold_greedy(s, 4, 2);
  EXPECT_EQ(c.objective, 4);
  EXPECT_TRUE(verify_cover(s, 4, c, 2).valid());
}

TEST(Threshold, WorkedExampleTwoAllele) {
  auto s = pqrs();
  auto c = solve_threshold_greedy(s, 2, 3);
  EXPECT_EQ(c.objective, 2);
  EXPECT_TRUE(verify_cover(s, 2, c).valid());
}

TEST(Threshold, ChargingBound) {
  EXPECT_EQ(threshold_greedy_bound(3, 3), Rational(11, 6));
  for (int i = 0; i < 20; ++i) {
    auto s = gen_family_sib(8, 2, 5, 2, 40 + i);
    int k = i % 2 ? 2 : 4;
    auto c = solve_threshold_greedy(s, k, 3);
    EXPECT_TRUE(verify_cover(s, k, c).valid());
    int a = 1;
    for (const auto& g : enumerate_groups(s, k, 8)) a = std::max(a, static_cast<int>(g.size()));
    EXPECT_LE(Rational(static_cast<std::int64_t>(c.groups.size()), oracle_cover(s, k, 8)), threshold_greedy_bound(a, 3));
  }
}

TEST(A3, TwoDisjointTriples) {
  auto s = parse_sib_instance("id a b\n1 1 2\n2 3 4\n3 1 3\n4 5 6\n5 7 8\n6 5 7\n");
  auto c = solve_a3(s, 4);
  EXPECT_EQ(c.objective, 2);
  EXPECT_EQ(oracle_cover(s, 4, 3), 2);
}

TEST(A3, NoTriplesMeansPairs) {
  auto s = all_distinct(5);
  EXPECT_EQ(solve_a3(s, 4).objective, 3);
  EXPECT_EQ(oracle_cover(s, 4, 3), 3);
}

TEST(A3, RatioAgainstOracle) {
  for (int i = 0; i < 20; ++i) {
    auto s = gen_family_sib(5 + i % 5, 2, 4, 2, 60 + i);
    int k = i % 2 ? 2 : 4;
    auto c = solve_a3(s, k);
    EXPECT_TRUE(verify_cover(s, k, c, 3).valid());
    EXPECT_LE(Rational(static_cast<std::int64_t>(c.groups.size()), oracle_cover(s, k, 3)), Rational(7, 6) + Rational(1, 100));
  }
}

TEST(A4, TwoDisjointQuads) {
  auto s = parse_sib_instance("id a b\n1 1 2\n2 3 4\n3 1 3\n4 2 4\n5 5 6\n6 7 8\n7 5 7\n8 6 8\n");
  auto c = solve_a4(s, 4);
  EXPECT_EQ(c.objective, 2);
  EXPECT_TRUE(verify_cover(s, 4, c, 4).valid());
}

TEST(A4, NoLargeGroupsMeansPairs) { EXPECT_EQ(solve_a4(all_distinct(6), 4).objective, 3); }

TEST(A4, RatioAgainstOracle) {
  for (int i = 0; i < 20; ++i) {
    auto s = gen_family_sib(5 + i % 4, 2, 4, 2, 80 + i);
    int k = i % 2 ? 2 : 4;
    auto c = solve_a4(s, k);
    EXPECT_TRUE(verify_cover(s, k, c, 4).valid());
    EXPECT_LE(Rational(static_cast<std::int64_t>(c.groups.size()), oracle_cover(s, k, 4)), Rational(151, 100));
  }
}

TEST(SetCoverGreedy, Examples) {
  EXPECT_EQ(solve_setcover_greedy(identical(6), 4, 6).objective, 1);
  auto c = solve_setcover_greedy(pqrs(), 4, 3);
  EXPECT_EQ(c.objective, 2);
  EXPECT_TRUE(verify_cover(pqrs(), 4, c, 3).valid());
}

TEST(SetCoverGreedy, LogBound) {
  for (int i = 0; i < 15; ++i) {
    auto s = gen_family_sib(8, 2, 5, 2, 120 + i);
    auto c = solve_setcover_greedy(s, 4, 3);
    EXPECT_TRUE(verify_cover(s, 4, c, 3).valid());
    EXPECT_LE(static_cast<double>(c.groups.size()), (1 + std::log(3.0)) * oracle_cover(s, 4, 3) + 1e-9);
  }
}

TEST(Exact, Examples) {
  EXPECT_EQ(solve_exact_cover(pqrs(), 2, 4).objective, 2);
  EXPECT_EQ(solve_exact_cover(pqrs(), 4, 4).objective, 2);
  EXPECT_EQ(solve_exact_cover(identical(1), 2, 1).objective, 1);
}

TEST(Exact, TwoAlleleOptimumAtLeastFourAllele) {
  for (int i = 0; i < 20; ++i) {
    auto s = gen_family_sib(8, 2, 5, 3, 200 + i);
    auto two = solve_exact_cover(s, 2, 8);
    auto four = solve_exact_cover(s, 4, 8);
    EXPECT_GE(two.objective, four.objective);
    EXPECT_EQ(two.objective, oracle_cover(s, 2, 8));
    EXPECT_TRUE(verify_cover(s, 2, two).valid());
  }
}

TEST(Exact, BudgetExceeded) {
  Budget b;
  b.max_nodes = 3;
  EXPECT_THROW(solve_exact_cover(gen_random_sib(12, 1, 6, 1), 4, 4, b), BudgetExceeded);
}

TEST(Params, ImprovementSize) {
  EXPECT_EQ(improvement_size_for(0.5), 2);
  EXPECT_EQ(improvement_size_for(0.01), 3);
  EXPECT_THROW(improvement_size_for(0), InvalidInput);
}
