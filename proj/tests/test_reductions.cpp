#include <gtest/gtest.h>

#include <set>

#include "packcover/core/generators.hpp"
#include "packcover/core/verify.hpp"
#include "packcover/mpc.hpp"
#include "packcover/packing.hpp"
#include "packcover/reductions.hpp"
#include "packcover/sibcheck.hpp"
#include "packcover/sibcover.hpp"
#include "packcover/testing/oracles.hpp"

using namespace packcover;

namespace {

Lin2System two_equations() {
  return Lin2System(4, {Lin2Equation{{Literal{0, false}, Literal{1, false}, Literal{2, false}}, 0},
                        Lin2Equation{{Literal{1, false}, Literal{2, false}, Literal{3, false}}, 0}});
}

bool is_triangle(const Graph& g, int a, int b, int c) { return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c); }

}  // namespace

TEST(Gadgets, Shapes) {
  const auto& even = synth_equation_gadget(0);
  const auto& odd = synth_equation_gadget(1);
  EXPECT_EQ(even.node_count, 9);
  EXPECT_EQ(odd.node_count, 7);
  EXPECT_EQ(even.self_sufficient.size(), 2u);
  EXPECT_EQ(odd.self_sufficient.size(), 1u);
  EXPECT_EQ(&synth_equation_gadget(0), &even);
}

TEST(Amplifier, SmallestInstance) {
  auto a = build_amplifier(1, 3);
  EXPECT_EQ(a.node_count(), 14);
  EXPECT_EQ(a.white_contacts(), std::vector<int>{0});
  EXPECT_EQ(a.black_contacts(), std::vector<int>{7});
  Graph g(a.node_count(), a.edges());
  for (int u = 0; u < a.node_count(); ++u) EXPECT_EQ(g.degree(u), Amplifier::is_contact(u) ? 2 : 3) << u;
  for (auto [w, b] : a.matching) {
    EXPECT_TRUE(Amplifier::is_white(w));
    EXPECT_FALSE(Amplifier::is_white(b));
  }
  EXPECT_THROW(build_amplifier(0, 1), InvalidInput);
}

TEST(Amplifier, UniformPatternLosesNothing) {
  for (int k = 1; k <= 3; ++k) {
    auto a = build_amplifier(k, 100 + k);
    std::vector<bool> white_side(static_cast<std::size_t>(2 * k), false);
    for (int i = 0; i < k; ++i) white_side[static_cast<std::size_t>(i)] = true;
    auto r = amplifier_pattern_check(a, white_side);
    EXPECT_EQ(r.minority, 0);
    EXPECT_EQ(r.uncovered, 0);
  }
}

TEST(Amplifier, MinorityCostsAtLeastItsSize) {
  for (int k = 4; k <= 5; ++k) {
    auto a = build_amplifier(k, 7 * k);
    for (std::uint32_t m = 0; m < (1u << (2 * k)); m += 7) {
      std::vector<bool> sel(static_cast<std::size_t>(2 * k));
      for (int i = 0; i < 2 * k; ++i) sel[static_cast<std::size_t>(i)] = m >> i & 1u;
      auto r = amplifier_pattern_check(a, sel);
      EXPECT_GE(r.uncovered, r.minority) << "k " << k << " pattern " << m;
    }
  }
}

TEST(Lin2ToTp, SizesAndDeterminism) {
  auto sys = two_equations();
  auto [g, cert] = lin2_to_tp(sys, 1, 11);
  EXPECT_EQ(cert.m_s, 2);
  EXPECT_EQ(g.node_count(), 228 * cert.m_s);
  EXPECT_EQ(cert.variable_count, 4);
  auto [g2, cert2] = lin2_to_tp(sys, 1, 11);
  EXPECT_EQ(g, g2);
  EXPECT_EQ(lin2_tsol_size(cert, 0), 76 * cert.m_s);
  EXPECT_EQ(lin2_tsol_size(cert, 2), 74 * cert.m_s);
}

TEST(Lin2ToTp, SolutionPackingRoundTrip) {
  auto sys = two_equations();
  auto [g, cert] = lin2_to_tp(sys, 1, 5);
  for (std::uint32_t m = 0; m < 16; ++m) {
    std::vector<int> a{static_cast<int>(m & 1), static_cast<int>(m >> 1 & 1), static_cast<int>(m >> 2 & 1),
                       static_cast<int>(m >> 3 & 1)};
    auto p = lin2_solution_to_packing(a, cert);
    EXPECT_TRUE(verify_triangle_packing(g, p).valid());
    EXPECT_EQ(static_cast<std::int64_t>(p.members.size()), lin2_tsol_size(cert, sys.violated_count(a)));
    EXPECT_EQ(packing_to_assignment(p, cert), a);
  }
}

TEST(Lin2ToTp, NormalizeRepairsPerturbedPacking) {
  auto sys = two_equations();
  auto [g, cert] = lin2_to_tp(sys, 1, 9);
  auto p = lin2_solution_to_packing({0, 0, 0, 0}, cert);
  p.members.erase(p.members.begin(), p.members.begin() + 10);
  p.objective = static_cast<std::int64_t>(p.members.size());
  auto q = normalize_packing(p, cert);
  EXPECT_TRUE(verify_triangle_packing(g, q).valid());
  EXPECT_GE(q.members.size(), p.members.size());
  EXPECT_EQ(normalize_packing(q, cert).members, q.members);
}

TEST(Lin2ToTp, CertificateJsonRoundTrip) {
  auto [g, cert] = lin2_to_tp(two_equations(), 1, 2);
  auto back = lin2_certificate_from_json(to_json(cert));
  EXPECT_EQ(back.node_count, cert.node_count);
  EXPECT_EQ(lin2_solution_to_packing({1, 0, 0, 1}, back).members, lin2_solution_to_packing({1, 0, 0, 1}, cert).members);
}

TEST(LabelCover, TriangleVersusPath) {
  auto [tri, c1] = tp_to_labelcover(complete_graph(3));
  EXPECT_TRUE(check_labels(tri, {0, 1, 2}));
  Graph path(3, {{0, 1}, {1, 2}});
  auto [p, c2] = tp_to_labelcover(path);
  EXPECT_FALSE(check_labels(p, {0, 1, 2}));
  EXPECT_TRUE(check_labels(p, {0, 2}));
  EXPECT_EQ(c2.loci.size(), 3u * 3u);
}

TEST(LabelCover, TriplesAreTriangles) {
  for (int i = 0; i < 20; ++i) {
    auto g = gen_random_graph(6, 0.5, 2100 + i);
    auto [lc, cert] = tp_to_labelcover(g);
    for (int k : {2, 4}) {
      auto inst = labelcover_to_allele(lc, k);
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          for (int c = b + 1; c < 6; ++c) {
            EXPECT_EQ(check_labels(lc, {a, b, c}), is_triangle(g, a, b, c));
            EXPECT_EQ(check_group(inst, {a, b, c}, k), is_triangle(g, a, b, c));
          }
    }
  }
}

TEST(LabelCover, PackingTransport) {
  auto g = complete_graph(6);
  auto p = exact_packing(enumerate_triangles(g));
  auto c = packing_to_label_cover(p, 6);
  EXPECT_EQ(c.groups.size(), 2u);
  EXPECT_EQ(label_cover_to_packing(c).members.size(), 2u);
  auto [lc, cert] = tp_to_labelcover(g);
  EXPECT_TRUE(verify_cover(labelcover_to_allele(lc, 2), 2, c, 3).valid());
}

TEST(Cut, K4Sizes) {
  auto [inst, cert] = cut_to_allele(complete_graph(4));
  EXPECT_EQ(cert.source_nodes, 4);
  EXPECT_EQ(cert.source_edges.size(), 6u);
  EXPECT_EQ(inst.size(), cert.individual_count);
  for (int u = 0; u < 4; ++u) EXPECT_EQ(node_potential(cert, u), Rational(39, 2));
  std::vector<int> balanced{0, 0, 1, 1}, lopsided{0, 0, 0, 1};
  auto c1 = cut_solution_to_cover(balanced, cert);
  auto c2 = cut_solution_to_cover(lopsided, cert);
  EXPECT_TRUE(verify_cover(inst, 2, c1).valid());
  EXPECT_EQ(c1.groups.size(), 78u + 2u);
  EXPECT_EQ(c2.groups.size(), 78u + 3u);
  EXPECT_EQ(uncut_edges(cert.source_edges, balanced), 2);
}

TEST(Cut, RejectsNonCubic) {
  EXPECT_THROW(cut_to_allele(cycle_graph(5)), InvalidInput);
}

TEST(Cut, CertificateJsonRoundTrip) {
  auto [inst, cert] = cut_to_allele(complete_graph(4));
  auto back = cut_certificate_from_json(to_json(cert));
  std::vector<int> side{1, 0, 1, 0};
  EXPECT_EQ(cut_solution_to_cover(side, back).groups, cut_solution_to_cover(side, cert).groups);
}

TEST(Coloring, Triangle) {
  auto g = complete_graph(3);
  auto [inst, cert] = coloring_to_allele(g);
  auto c = coloring_to_cover({0, 1, 2}, cert);
  EXPECT_EQ(c.groups.size(), 3u);
  EXPECT_TRUE(verify_cover(inst, 4, c).valid());
  auto back = cover_to_coloring(c, cert);
  EXPECT_TRUE(is_proper_coloring(g, back));
}

TEST(Coloring, EdgelessIsOneGroup) {
  Graph g(5, {});
  auto [inst, cert] = coloring_to_allele(g);
  auto c = coloring_to_cover({0, 0, 0, 0, 0}, cert);
  EXPECT_EQ(c.groups.size(), 1u);
  EXPECT_TRUE(verify_cover(inst, 4, c).valid());
  EXPECT_EQ(cert.distinctness_loci, 4);
}

TEST(Coloring, LargeGroupsAreIndependentSets) {
  for (int i = 0; i < 20; ++i) {
    auto g = gen_random_graph(6, 0.4, 2300 + i);
    auto [lc, cert] = coloring_to_labelcover(g);
    for (std::uint32_t m = 0; m < 64; ++m) {
      if (std::popcount(m) < 3) continue;
      std::vector<int> grp;
      for (int v = 0; v < 6; ++v)
        if (m >> v & 1u) grp.push_back(v);
      bool independent = true;
      for (std::size_t x = 0; x < grp.size(); ++x)
        for (std::size_t y = x + 1; y < grp.size(); ++y) independent = independent && !g.has_edge(grp[x], grp[y]);
      EXPECT_EQ(check_labels(lc, grp), independent) << "graph " << i << " mask " << m;
    }
  }
}

TEST(Coloring, CoverGivesProperColoring) {
  for (int i = 0; i < 10; ++i) {
    auto g = gen_random_graph(6, 0.5, 2400 + i);
    auto [inst, cert] = coloring_to_allele(g);
    auto c = solve_exact_cover(inst, 4, 6);
    auto col = cover_to_coloring(c, cert);
    EXPECT_TRUE(is_proper_coloring(g, col));
    EXPECT_LE(oracle::chromatic_number(g), 2 * static_cast<int>(c.groups.size()));
    EXPECT_LE(static_cast<int>(c.groups.size()), oracle::chromatic_number(g));
  }
}

TEST(IsToMpc, ProfitEqualsIndependence) {
  for (const auto& g : {complete_graph(4), petersen_graph(), cycle_graph(6)}) {
    auto red = is_to_mpc(g);
    EXPECT_EQ(mpc_exact(red.system).objective, oracle::max_independent_set(g));
    EXPECT_EQ(red.system.max_frequency(), 2);
  }
  EXPECT_EQ(is_to_mpc(complete_graph(4)).degree, 3);
}

TEST(IsToMpc, RejectsIrregular) {
  Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(is_to_mpc(path), InvalidInput);
}

TEST(IsToMpc, MetricBallsMatchSets) {
  auto g = cycle_graph(6);
  auto red = is_to_mpc(g, true, 1);
  ASSERT_TRUE(red.metric.has_value());
  EXPECT_EQ(red.metric->point_count, 6 + 6);
  EXPECT_EQ(red.metric->distance.size(), static_cast<std::size_t>(red.metric->point_count));
  for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(red.metric->balls[v], red.system.set(v));
  EXPECT_THROW(is_to_mpc(g, true, 0), InvalidInput);
}
