#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "packcover/core/generators.hpp"
#include "packcover/core/verify.hpp"
#include "packcover/cov2.hpp"
#include "packcover/testing/oracles.hpp"

using namespace packcover;

namespace {

WeightedSetSystem four_cycle() { return WeightedSetSystem(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

}  // namespace

TEST(Cov2, IdenticalPair) {
  WeightedSetSystem sys(3, {{0, 1, 2}, {0, 1, 2}, {0}});
  EXPECT_EQ(cov2_pairwise(sys, 2).objective, 3);
  EXPECT_EQ(cov2_two_phase(sys, 2).objective, 3);
  EXPECT_EQ(cov2_exact(sys, 2).objective, 3);
}

TEST(Cov2, FourCycle) {
  auto sys = four_cycle();
  EXPECT_EQ(cov2_exact(sys, 2).objective, 1);
  EXPECT_EQ(cov2_pairwise(sys, 2).objective, 1);
  EXPECT_EQ(cov2_exact(sys, 4).objective, 4);
}

TEST(Cov2, DisjointSetsGiveZero) {
  WeightedSetSystem sys(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(cov2_exact(sys, 2).objective, 0);
  EXPECT_EQ(cov2_combined(sys, 2).objective, 0);
  EXPECT_EQ(cov2_exact(sys, 0).objective, 0);
}

TEST(Cov2, SolutionListsTwiceCovered) {
  auto sol = make_cov2_solution(four_cycle(), {0, 1, 2});
  EXPECT_EQ(sol.twice_covered, (std::vector<int>{1, 2}));
  EXPECT_EQ(sol.objective, 2);
  EXPECT_THROW(make_cov2_solution(four_cycle(), {9}), InvalidInput);
}

TEST(DsReduction, Examples) {
  EXPECT_EQ(cov2_exact(ds_to_cov2(complete_graph(3)), 2).objective, 1);
  EXPECT_EQ(cov2_exact(ds_to_cov2(complete_graph(4)), 3).objective, 3);
  EXPECT_EQ(cov2_exact(ds_to_cov2(star(4)), 2).objective, 1);
  auto sys = ds_to_cov2(complete_graph(5));
  EXPECT_EQ(sys.max_frequency(), 2);
  EXPECT_EQ(sys.universe_size(), 10);
}

TEST(DsReduction, MatchesDensestSubgraph) {
  for (int i = 0; i < 30; ++i) {
    auto g = gen_random_graph(6 + i % 3, 0.5, 1500 + i);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(cov2_exact(ds_to_cov2(g), k).objective, oracle::densest_k_subgraph(g, k));
  }
}

TEST(WeightedDs, Examples) {
  auto g = cov2_to_weighted_ds(four_cycle());
  EXPECT_EQ(g.node_count(), 4);
  EXPECT_EQ(g.edge_count(), 4u);
  auto h = cov2_to_weighted_ds(WeightedSetSystem(3, {{0, 1, 2}, {0, 1}, {2}}));
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_FALSE(h.has_edge(1, 2));
}

TEST(Greedy, CoverageBound) {
  for (int i = 0; i < 20; ++i) {
    auto sys = gen_random_system(10, 8, 4, 1600 + i);
    for (int k = 1; k <= 3; ++k) {
      auto sel = maxcov_greedy(sys, k);
      EXPECT_LE(sel.size(), static_cast<std::size_t>(k));
      double kk = std::pow(k, k), km = std::pow(k - 1, k);
      EXPECT_GE(static_cast<double>(coverage(sys, sel)) * kk + 1e-9, (kk - km) * oracle::max_coverage(sys, k));
    }
  }
}

TEST(Combined, DominatesBothRoutesAndIsFeasible) {
  for (int i = 0; i < 30; ++i) {
    auto sys = gen_random_system(8, 7, 4, 1700 + i);
    for (int k = 2; k <= 4; ++k) {
      auto c = cov2_combined(sys, k);
      EXPECT_GE(c.objective, cov2_pairwise(sys, k).objective);
      EXPECT_GE(c.objective, cov2_two_phase(sys, k).objective);
      EXPECT_LE(c.objective, oracle::max_two_coverage(sys, k));
      EXPECT_TRUE(verify_cov2(sys, k, c).valid());
      EXPECT_EQ(cov2_exact(sys, k).objective, oracle::max_two_coverage(sys, k));
    }
  }
}

TEST(Exact, Budget) {
  Budget b;
  b.max_nodes = 10;
  EXPECT_THROW(cov2_exact(gen_random_system(10, 12, 3, 4), 5, b), BudgetExceeded);
}

TEST(Oracle, DegreeSortedEnumerationHitsEveryClass) {
  auto canonical = [](const Graph& g) {
    const int n = g.node_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
      std::uint32_t code = 0;
      for (auto [u, v] : g.edges()) {
        int a = std::min(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        int b = std::max(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        code |= 1u << (a * n + b);
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  const std::size_t classes[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    std::set<std::uint32_t> seen;
    oracle::for_each_degree_sorted_graph(n, [&](const Graph& g) { seen.insert(canonical(g)); });
    EXPECT_EQ(seen.size(), classes[n]) << "n " << n;
  }
}

TEST(Oracle, DensestProfile) {
  auto best = oracle::densest_profile(complete_graph(5));
  EXPECT_EQ(best, (std::vector<int>{0, 0, 1, 3, 6, 10}));
  auto g = gen_random_graph(7, 0.5, 12);
  auto p = oracle::densest_profile(g);
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(p[static_cast<std::size_t>(k)], oracle::densest_k_subgraph(g, k));
}
