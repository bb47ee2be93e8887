#include <gtest/gtest.h>

#include "packcover/core/generators.hpp"
#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/core/verify.hpp"

using namespace packcover;

namespace {

const char* kPqrs = "id l1a l1b l2a l2b\np 1 2 5 5\nq 3 4 5 5\nr 1 1 5 5\ns 5 5 5 5\n";

}  // namespace

TEST(GraphParse, CompleteGraphOnSix) {
  auto g = parse_graph(serialize_graph(complete_graph(6)));
  EXPECT_EQ(g.node_count(), 6);
  EXPECT_EQ(g.edge_count(), 15u);
  EXPECT_TRUE(g.has_edge(0, 5));
}

TEST(GraphParse, DuplicateEdgesCollapseWithWarning) {
  auto r = parse_graph_with_warnings("p 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_TRUE(!r.graph.warnings().empty() || !r.warnings.empty());
}

TEST(GraphParse, SelfLoopRejected) { EXPECT_THROW(parse_graph("p 2 1\ne 1 1\n"), Error); }

TEST(GraphParse, MalformedLineReportsLineNumber) {
  try {
    parse_graph("p 3 1\nc comment\nx 1 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GraphParse, EmptyGraph) {
  auto g = parse_graph("p 0 0\n");
  EXPECT_EQ(g.node_count(), 0);
}

TEST(SetSystemParse, ComputesSizeAndFrequency) {
  auto s = parse_set_system("u 4\nw 2 3\ns 1 1 2\ns 0 2 3 4\ns 2 2\n");
  EXPECT_EQ(s.universe_size(), 4);
  EXPECT_EQ(s.set_count(), 3u);
  EXPECT_EQ(s.max_set_size(), 3);
  EXPECT_EQ(s.max_frequency(), 3);
  EXPECT_EQ(s.weight(1), 3);
  EXPECT_EQ(s.weight(0), 1);
  EXPECT_EQ(s.cost(2), 2);
}

TEST(SetSystemParse, ElementOutOfRange) { EXPECT_THROW(parse_set_system("u 2\ns 0 1 3\n"), Error); }

TEST(SetSystemParse, NegativeWeightOrCost) {
  EXPECT_THROW(parse_set_system("u 2\nw 1 -1\ns 0 1\n"), Error);
  EXPECT_THROW(parse_set_system("u 2\ns -1 1\n"), Error);
}

TEST(GenotypeParse, FourIndividualExample) {
  auto s = parse_sib_instance(kPqrs);
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.locus_count(), 2);
  EXPECT_EQ(s.at(0, 0).first, 1);
  EXPECT_EQ(s.at(0, 0).second, 2);
}

TEST(GenotypeParse, EmptyBody) {
  auto s = parse_sib_instance("id l1a l1b\n");
  EXPECT_EQ(s.size(), 0);
}

TEST(GenotypeParse, RaggedRowRejected) {
  EXPECT_THROW(parse_sib_instance("id l1a l1b l2a l2b\np 1 2 3\n"), ParseError);
  EXPECT_THROW(parse_sib_instance("id l1a l1b\np 1 x\n"), ParseError);
}

TEST(RoundTrip, AllInstanceKinds) {
  auto g = gen_random_graph(9, 0.4, 5);
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  auto s = gen_random_sib(6, 3, 5, 5);
  EXPECT_EQ(parse_sib_instance(serialize_sib_instance(s)), s);
  auto w = gen_random_system(8, 6, 3, 5);
  EXPECT_EQ(parse_set_system(serialize_set_system(w)), w);
  auto l = gen_random_lin2(5, 4, 5);
  EXPECT_EQ(parse_lin2(serialize_lin2(l)), l);
}

TEST(RoundTrip, RationalWeights) {
  auto s = parse_set_system("u 2\nw 1 3/2\nw 2 0.25\ns 1/3 1 2\n");
  EXPECT_EQ(s.weight(0), Rational(3, 2));
  EXPECT_EQ(s.weight(1), Rational(1, 4));
  EXPECT_EQ(parse_set_system(serialize_set_system(s)), s);
}

TEST(Lin2Parse, NegatedLiterals) {
  auto l = parse_lin2("l 3 1\nq 1 -2 3 1\n");
  ASSERT_EQ(l.equations().size(), 1u);
  EXPECT_TRUE(l.equations()[0].literals[1].negated);
  EXPECT_EQ(l.equations()[0].rhs, 1);
  EXPECT_TRUE(l.satisfied(l.equations()[0], {1, 0, 1}));
  EXPECT_THROW(parse_lin2("l 3 1\nq 1 2 4 0\n"), ParseError);
}

TEST(Verify, DisjointTrianglesOfK6) {
  auto g = complete_graph(6);
  PackingSolution p;
  p.members = {{0, 1, 2}, {3, 4, 5}};
  p.objective = 2;
  auto r = verify_triangle_packing(g, p);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.objective, 2);
}

TEST(Verify, OverlappingTrianglesRejected) {
  auto g = complete_graph(6);
  PackingSolution p;
  p.members = {{0, 1, 2}, {2, 3, 4}};
  p.objective = 2;
  EXPECT_FALSE(verify_triangle_packing(g, p).valid());
}

TEST(Verify, CoverViolatingTwoAllele) {
  auto s = parse_sib_instance(kPqrs);
  CoverSolution c;
  c.groups = {{0, 1, 2}, {3}};
  c.objective = 2;
  EXPECT_FALSE(verify_cover(s, 2, c).valid());
  EXPECT_TRUE(verify_cover(s, 4, c).valid());
}

TEST(Verify, MisreportedObjective) {
  auto g = complete_graph(3);
  PackingSolution p;
  p.members = {{0, 1, 2}};
  p.objective = 5;
  EXPECT_FALSE(verify_triangle_packing(g, p).valid());
}

TEST(Generators, CubicOnFourIsK4) {
  auto g = gen_random_cubic(4, 17);
  EXPECT_EQ(g.edge_count(), 6u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);
}

TEST(Generators, CubicRejectsOddOrder) { EXPECT_THROW(gen_random_cubic(5, 1), Error); }

TEST(Generators, ZeroProbabilityIsEdgeless) { EXPECT_EQ(gen_random_graph(5, 0.0, 3).edge_count(), 0u); }

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_random_sib(3, 2, 4, 9), gen_random_sib(3, 2, 4, 9));
  EXPECT_EQ(gen_random_graph(10, 0.5, 9), gen_random_graph(10, 0.5, 9));
  EXPECT_EQ(gen_random_system(6, 5, 3, 9), gen_random_system(6, 5, 3, 9));
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(hex_digest("abc"), hex_digest("abc"));
  EXPECT_NE(hex_digest("abc"), hex_digest("abd"));
  EXPECT_EQ(hex_digest("").size(), 16u);
}

TEST(Budget, TrackerThrows) {
  Budget b;
  b.max_nodes = 3;
  BudgetTracker t(b);
  t.tick();
  t.tick();
  t.tick();
  EXPECT_THROW(t.tick(), BudgetExceeded);
}
