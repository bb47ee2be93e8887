#include <gtest/gtest.h>

#include <algorithm>

#include "packcover/core/generators.hpp"
#include "packcover/core/io.hpp"
#include "packcover/sibcheck.hpp"
#include "packcover/testing/oracles.hpp"

using namespace packcover;

namespace {

SibInstance pqrs() { return parse_sib_instance("id a b c d\np 1 2 5 5\nq 3 4 5 5\nr 1 1 5 5\ns 5 5 5 5\n"); }

std::vector<std::vector<int>> subsets_up_to(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) > max_size) continue;
    std::vector<int> g;
    for (int p = 0; p < n; ++p)
      if (m >> p & 1u) g.push_back(p);
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(FourAllele, WorkedExample) {
  auto s = pqrs();
  EXPECT_FALSE(check_4allele(s, {0, 1, 2, 3}));
  EXPECT_TRUE(check_4allele(s, {0, 1, 2}));
}

TEST(FourAllele, PairsAlwaysFeasible) {
  auto s = gen_random_sib(7, 4, 9, 3);
  for (int a = 0; a < 7; ++a)
    for (int b = a; b < 7; ++b) EXPECT_TRUE(check_4allele(s, {a, b}));
}

TEST(TwoAllele, WorkedExample) {
  auto s = pqrs();
  EXPECT_FALSE(check_2allele(s, {0, 1, 2}));
  auto w = witness_2allele(s, {0, 3});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->father[0], (std::vector<int>{1, 5}));
  EXPECT_EQ(w->mother[0], (std::vector<int>{2, 5}));
  EXPECT_TRUE(witness_is_sound(s, {0, 3}, *w));
}

TEST(TwoAllele, HomozygousNeedsBothSides) {
  // (1,1) forces 1 into both parental sets; (2,3) and (4,4) then cannot fit
  auto s = parse_sib_instance("id a b\nx 1 1\ny 2 3\nz 4 4\n");
  EXPECT_FALSE(check_2allele(s, {0, 1, 2}));
  EXPECT_TRUE(check_2allele(s, {0, 1}));
  EXPECT_TRUE(check_4allele(s, {0, 1, 2}));
}

TEST(TwoAllele, AgreesWithOrientationSearch) {
  for (int i = 0; i < 40; ++i) {
    auto s = (i % 2) ? gen_random_sib(5, 1 + i % 4, 4, 100 + i) : gen_family_sib(5, 1 + i % 4, 6, 2, 100 + i);
    for (const auto& g : subsets_up_to(5, 5)) {
      ASSERT_EQ(check_2allele(s, g), oracle::orientation_feasible(s, g)) << "instance " << i;
      auto w = witness_2allele(s, g);
      ASSERT_EQ(w.has_value(), check_2allele(s, g));
      if (w) EXPECT_TRUE(witness_is_sound(s, g, *w));
    }
  }
}

TEST(TwoAllele, ImpliesFourAllele) {
  for (int i = 0; i < 30; ++i) {
    auto s = gen_family_sib(6, 3, 5, 2, 300 + i);
    for (const auto& g : subsets_up_to(6, 6))
      if (check_2allele(s, g)) EXPECT_TRUE(check_4allele(s, g));
  }
}

TEST(CheckGroup, Dispatch) {
  auto s = pqrs();
  EXPECT_TRUE(check_group(s, {}, 2));
  EXPECT_TRUE(check_group(s, {2}, 4));
  EXPECT_TRUE(check_group(s, {0, 1, 2}, 4));
  EXPECT_FALSE(check_group(s, {0, 1, 2}, 2));
  EXPECT_THROW(check_group(s, {0}, 3), InvalidInput);
  EXPECT_THROW(check_group(s, {7}, 2), InvalidInput);
}

TEST(CheckGroup, Monotone) {
  for (int i = 0; i < 20; ++i) {
    auto s = gen_family_sib(6, 2, 5, 2, 500 + i);
    for (int k : {2, 4}) {
      for (const auto& g : subsets_up_to(6, 6)) {
        if (!check_group(s, g, k)) continue;
        for (std::size_t drop = 0; drop < g.size(); ++drop) {
          auto h = g;
          h.erase(h.begin() + static_cast<std::ptrdiff_t>(drop));
          EXPECT_TRUE(check_group(s, h, k));
        }
      }
    }
  }
}

TEST(EnumerateGroups, WorkedExampleFourAllele) {
  auto groups = enumerate_groups(pqrs(), 4, 3);
  EXPECT_NE(std::find(groups.begin(), groups.end(), std::vector<int>{0, 1, 2}), groups.end());
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      EXPECT_NE(std::find(groups.begin(), groups.end(), std::vector<int>{a, b}), groups.end());
}

TEST(EnumerateGroups, WorkedExampleTwoAllele) {
  auto s = pqrs();
  auto groups = enumerate_groups(s, 2, 3);
  std::size_t expected = 1 + 4 + 6;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) expected += oracle::orientation_feasible(s, {a, b, c}) ? 1 : 0;
  EXPECT_EQ(groups.size(), expected);
  EXPECT_EQ(std::find(groups.begin(), groups.end(), std::vector<int>{0, 1, 2}), groups.end());
}

TEST(EnumerateGroups, SizeTwoListsEverySubset) {
  auto s = gen_random_sib(8, 3, 10, 4);
  auto groups = enumerate_groups(s, 2, 2);
  EXPECT_EQ(groups.size(), 1u + 8u + 28u);
  auto sorted = groups;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(EnumerateGroups, BudgetGuard) {
  auto s = gen_random_sib(40, 1, 2, 4);
  EXPECT_THROW(enumerate_groups(s, 4, 10, 1e6), BudgetExceeded);
  EXPECT_THROW(enumerate_groups(s, 4, 0), InvalidInput);
}
