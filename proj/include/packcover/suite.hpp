#pragma once

// Acceptance suites: randomized and exhaustive checks of every module against
// the brute-force oracles in packcover/testing.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "packcover/core/generators.hpp"
#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/core/verify.hpp"
#include "packcover/cov2.hpp"
#include "packcover/mpc.hpp"
#include "packcover/packing.hpp"
#include "packcover/reductions.hpp"
#include "packcover/sibcheck.hpp"
#include "packcover/sibcover.hpp"
#include "packcover/testing/oracles.hpp"

namespace packcover {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_ms = 0;
};

inline Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"wall_ms", r.wall_ms}};
}

namespace suite_detail {

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t i) { return splitmix64(seed ^ splitmix64(i + 1)); }

/// Collects failures; keeps the first few messages for the report.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  std::string summary() const {
    std::ostringstream os;
    os << checks << " checks, " << failures << " failures";
    for (const auto& f : first) os << "; " << f;
    return os.str();
  }
};

inline const char* kPqrs =
    "id l1a l1b l2a l2b\n"
    "p 1 2 5 5\n"
    "q 3 4 5 5\n"
    "r 1 1 5 5\n"
    "s 5 5 5 5\n";

inline std::string ratio_text(const Rational& r) {
  std::ostringstream os;
  os.precision(4);
  os << to_double(r);
  return os.str();
}

}  // namespace suite_detail

// ---------------------------------------------------------------------------
// 1. allele predicates vs orientation search

inline CriterionResult criterion_feasibility_oracle(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{1, "allele predicates match exhaustive orientation search", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + i % 6;
    int loci = 1 + (i / 6) % 4;
    int pool = 3 + i % 4;
    auto inst = (i % 2 == 0) ? gen_random_sib(n, loci, pool, instance_seed(seed, i))
                             : gen_family_sib(n, loci, pool + 2, 2, instance_seed(seed, i));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) > 6) continue;
      std::vector<int> g;
      for (int p = 0; p < n; ++p)
        if (mask >> p & 1u) g.push_back(p);
      bool two = check_2allele(inst, g);
      bool four = check_4allele(inst, g);
      t.expect(two == oracle::orientation_feasible(inst, g), "2-allele mismatch on instance " + std::to_string(i));
      t.expect(four == oracle::four_allele_feasible(inst, g), "4-allele mismatch on instance " + std::to_string(i));
      t.expect(!two || four, "2-allele feasible but 4-allele infeasible on instance " + std::to_string(i));
      if (two) {
        auto w = witness_2allele(inst, g);
        t.expect(w && witness_is_sound(inst, g, *w), "unsound witness on instance " + std::to_string(i));
        if (g.size() >= 3) ++nontrivial;
      }
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  t.expect(r.wall_ms < 10000, "runtime over 10 s");
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; 2-allele feasible groups of size >= 3: " + std::to_string(nontrivial);
  return r;
}

// ---------------------------------------------------------------------------
// 2. the four-individual example

inline CriterionResult criterion_worked_example(std::uint64_t) {
  using namespace suite_detail;
  CriterionResult r{2, "p,q,r,s example", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  auto inst = parse_sib_instance(kPqrs);
  t.expect(inst.size() == 4 && inst.locus_count() == 2, "instance shape");
  t.expect(check_4allele(inst, {0, 1, 2}), "{p,q,r} should satisfy 4-allele");
  t.expect(!check_2allele(inst, {0, 1, 2}), "{p,q,r} should violate 2-allele");
  t.expect(!check_4allele(inst, {0, 1, 2, 3}), "{p,q,r,s} should violate 4-allele");
  t.expect(oracle::four_allele_feasible(inst, {0, 1, 2}) && !oracle::orientation_feasible(inst, {0, 1, 2}) &&
               !oracle::four_allele_feasible(inst, {0, 1, 2, 3}),
           "oracles disagree with the example");
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary();
  return r;
}

// ---------------------------------------------------------------------------
// 3. triangle packing local search

inline CriterionResult criterion_triangle_ratio(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{3, "triangle packing local search s=2 within 1.5", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  Rational worst = 1;
  for (int i = 0; i < 100; ++i) {
    int n = 4 + i % 9;
    double p = 0.3 + 0.2 * ((i / 9) % 3);
    auto g = gen_random_graph(n, p, instance_seed(seed, 1000 + i));
    auto tris = enumerate_triangles(g);
    auto opt = exact_packing(tris);
    int ref = oracle::max_triangle_packing(g);
    t.expect(opt.objective == ref, "exact packing disagrees with oracle on graph " + std::to_string(i));
    auto loc = local_search_packing(tris, 2);
    auto rep = verify_triangle_packing(g, loc);
    t.expect(rep.valid() && rep.objective == loc.objective, "invalid local search packing on graph " + std::to_string(i));
    std::int64_t size = static_cast<std::int64_t>(loc.members.size());
    t.expect(3 * size >= 2 * ref, "ratio violated on graph " + std::to_string(i));
    if (size > 0) worst = std::max(worst, Rational(ref, size));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  t.expect(r.wall_ms < 60000, "runtime over 60 s");
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; worst OPT/ALG " + ratio_text(worst);
  return r;
}

// ---------------------------------------------------------------------------
// 4. sibling cover ratios

inline CriterionResult criterion_cover_ratio(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{4, "sibling cover ratios a3, a4, threshold greedy", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  Rational worst3 = 1, worst4 = 1, worst_thr = 0;
  auto run = [&](int i, int n, int cap) {
    int k = (i % 2 == 0) ? 2 : 4;
    int loci = 2 + i % 2;
    auto inst = gen_family_sib(n, loci, 4 + i % 3, 2 + i % 2, instance_seed(seed, 2000 + i + 100 * cap));
    auto feasible = [&](const std::vector<int>& g) { return oracle::group_feasible(inst, g, k); };
    std::string tag = "a" + std::to_string(cap) + " instance " + std::to_string(i);
    int opt_cap = oracle::min_sibling_cover(n, cap, feasible);
    int opt_all = oracle::min_sibling_cover(n, n, feasible);
    t.expect(solve_exact_cover(inst, k, cap).objective == opt_cap, "exact cover disagrees with oracle on " + tag);
    auto sol = cap == 3 ? solve_a3(inst, k) : solve_a4(inst, k);
    auto rep = verify_cover(inst, k, sol, cap);
    t.expect(rep.valid() && rep.objective == sol.objective, "invalid cover on " + tag);
    Rational ratio(static_cast<std::int64_t>(sol.groups.size()), opt_cap);
    Rational bound = cap == 3 ? Rational(7, 6) + Rational(1, 100) : Rational(3, 2) + Rational(1, 100);
    t.expect(ratio <= bound, "ratio " + ratio_text(ratio) + " on " + tag);
    (cap == 3 ? worst3 : worst4) = std::max(cap == 3 ? worst3 : worst4, ratio);

    int a = 1;
    for (const auto& g : enumerate_groups(inst, k, n)) a = std::max(a, static_cast<int>(g.size()));
    auto thr = solve_threshold_greedy(inst, k, 3);
    auto trep = verify_cover(inst, k, thr);
    t.expect(trep.valid(), "invalid threshold cover on " + tag);
    Rational tr(static_cast<std::int64_t>(thr.groups.size()), opt_all);
    t.expect(tr <= threshold_greedy_bound(a, 3), "threshold ratio " + ratio_text(tr) + " on " + tag);
    worst_thr = std::max(worst_thr, tr / threshold_greedy_bound(a, 3));
  };
  for (int i = 0; i < 30; ++i) run(i, 5 + i % 5, 3);
  for (int i = 0; i < 30; ++i) run(i, 5 + i % 4, 4);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; worst a3 " + ratio_text(worst3) + ", a4 " + ratio_text(worst4) +
             ", threshold ratio/bound " + ratio_text(worst_thr);
  return r;
}

// ---------------------------------------------------------------------------
// 5. triangle packing to sibling cover

inline CriterionResult criterion_label_cover(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{5, "triangle packing vs sibling cover correspondence", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int graphs = 0;
  for (std::uint64_t i = 0; graphs < 50 && i < 10000; ++i) {
    int n = 3 + static_cast<int>(i % 6);
    auto g = gen_random_graph(n, 0.55, instance_seed(seed, 3000 + i));
    int comps = 0;
    detail::components_of(g, comps);
    if (comps != 1) continue;
    ++graphs;
    auto [lc, cert] = tp_to_labelcover(g);
    int tp = oracle::max_triangle_packing(g);
    int expect = tp + (n - 3 * tp + 1) / 2;
    std::string tag = "graph " + std::to_string(graphs);
    for (int k : {2, 4}) {
      auto inst = labelcover_to_allele(lc, k);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            bool tri = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
            t.expect(check_labels(lc, {a, b, c}) == tri, "label property fails on " + tag);
            t.expect(oracle::group_feasible(inst, {a, b, c}, k) == tri, "allele property fails on " + tag);
          }
      auto feasible = [&](const std::vector<int>& grp) { return oracle::group_feasible(inst, grp, k); };
      int cover = oracle::min_sibling_cover(n, 3, feasible);
      t.expect(cover == expect, tag + ": cover " + std::to_string(cover) + " vs " + std::to_string(expect));
      t.expect(solve_exact_cover(inst, k, 3).objective == cover, "exact cover disagrees on " + tag);
      auto fwd = packing_to_label_cover(exact_packing(enumerate_triangles(g)), n);
      t.expect(verify_cover(inst, k, fwd, 3).valid() && static_cast<int>(fwd.groups.size()) == expect,
               "forward cover invalid on " + tag);
    }
  }
  t.expect(graphs == 50, "could not draw 50 connected graphs");
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; graphs " + std::to_string(graphs);
  return r;
}

// ---------------------------------------------------------------------------
// 6. 3-LIN-2 gadgets, solution packing, normalization

namespace suite_detail {

/// Fewest uncovered non-self-sufficient nodes with the true literals removed,
/// by trying every subset of the gadget's triangles.
inline int gadget_row_optimum(const EquationGadget& g, int mask) {
  std::vector<Triangle> tris;
  for (int a = 0; a < g.node_count; ++a)
    for (int b = a + 1; b < g.node_count; ++b)
      for (int c = b + 1; c < g.node_count; ++c) {
        auto has = [&](int u, int v) {
          return std::find(g.edges.begin(), g.edges.end(), std::pair{std::min(u, v), std::max(u, v)}) != g.edges.end();
        };
        if (has(a, b) && has(b, c) && has(a, c)) tris.push_back({a, b, c});
      }
  std::uint32_t blocked = 0;
  for (int i = 0; i < 3; ++i)
    if (mask >> i & 1) blocked |= 1u << g.literals[static_cast<std::size_t>(i)];
  std::uint32_t counted = 0;
  for (int v = 0; v < g.node_count; ++v)
    if (!g.is_self_sufficient(v)) counted |= 1u << v;
  int best = g.node_count;
  for (std::uint32_t s = 0; s < (1u << tris.size()); ++s) {
    std::uint32_t used = blocked;
    bool ok = true;
    for (std::size_t i = 0; i < tris.size() && ok; ++i) {
      if (!(s >> i & 1u)) continue;
      std::uint32_t m = (1u << tris[i][0]) | (1u << tris[i][1]) | (1u << tris[i][2]);
      if (used & m) ok = false;
      used |= m;
    }
    if (ok) best = std::min(best, std::popcount(counted & ~used));
  }
  return best;
}

inline Lin2System two_equation_system() {
  return Lin2System(4, {Lin2Equation{{Literal{0, false}, Literal{1, false}, Literal{2, false}}, 0},
                        Lin2Equation{{Literal{1, false}, Literal{2, false}, Literal{3, false}}, 0}});
}

}  // namespace suite_detail

inline CriterionResult criterion_gadgets(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{6, "equation gadgets, solution packing size, normalization", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  for (int kind : {0, 1}) {
    const auto& g = synth_equation_gadget(kind);
    t.expect(g.node_count == (kind == 0 ? 9 : 7), "gadget node count");
    t.expect(static_cast<int>(g.self_sufficient.size()) == (kind == 0 ? 2 : 1), "self-sufficient count");
    for (int mask = 0; mask < 8; ++mask) {
      int want = (std::popcount(static_cast<unsigned>(mask)) % 2 == kind) ? 0 : 1;
      t.expect(gadget_row_optimum(g, mask) == want,
               "gadget =" + std::to_string(kind) + " row " + std::to_string(mask));
    }
  }

  auto sys = two_equation_system();
  auto [graph, cert] = lin2_to_tp(sys, 1, seed);
  t.expect(graph.node_count() == 228 * cert.m_s, "node count " + std::to_string(graph.node_count()));
  const std::vector<std::vector<int>> assignments{{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}};
  for (std::size_t l = 0; l < assignments.size(); ++l) {
    const auto& a = assignments[l];
    t.expect(sys.violated_count(a) == static_cast<int>(l), "assignment fixture");
    auto p = lin2_solution_to_packing(a, cert);
    auto rep = verify_triangle_packing(graph, p);
    t.expect(rep.valid(), "solution packing invalid for l=" + std::to_string(l));
    t.expect(static_cast<std::int64_t>(p.members.size()) == (76 - static_cast<std::int64_t>(l)) * cert.m_s,
             "solution packing size for l=" + std::to_string(l));
    t.expect(packing_to_assignment(p, cert) == a, "assignment not recovered");
    t.expect(normalize_packing(p, cert).members == p.members, "solution packing not a fixed point");
  }

  auto tris = enumerate_triangles(graph);
  int nondecreasing = 0, idempotent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 rng(instance_seed(seed, 6000 + trial));
    std::vector<std::size_t> order(tris.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle_deterministic(order, rng);
    std::vector<char> used(static_cast<std::size_t>(graph.node_count()), 0);
    PackingSolution p;
    for (auto i : order) {
      const auto& s = tris.sets[i];
      if (std::any_of(s.begin(), s.end(), [&](int v) { return used[static_cast<std::size_t>(v)]; })) continue;
      for (int v : s) used[static_cast<std::size_t>(v)] = 1;
      p.members.push_back(s);
    }
    p.objective = static_cast<std::int64_t>(p.members.size());
    auto q = normalize_packing(p, cert);
    t.expect(verify_triangle_packing(graph, q).valid(), "normalized packing invalid");
    if (q.members.size() >= p.members.size()) ++nondecreasing;
    if (normalize_packing(q, cert).members == q.members) ++idempotent;
  }
  t.expect(idempotent == 100, "normalization not idempotent");
  t.expect(nondecreasing >= 95, "normalization decreased too often");
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; m_S " + std::to_string(cert.m_s) + ", non-decreasing " + std::to_string(nondecreasing) +
             "/100, idempotent " + std::to_string(idempotent) + "/100";
  if (!cert.warnings.empty()) r.detail += "; " + cert.warnings.front();
  return r;
}

// ---------------------------------------------------------------------------
// 7. max-cut gadget on K4

inline CriterionResult criterion_cut(std::uint64_t) {
  using namespace suite_detail;
  CriterionResult r{7, "cut construction on K4", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  auto g = complete_graph(4);
  auto [inst, cert] = cut_to_allele(g);
  const int n2 = g.node_count();
  for (int u = 0; u < n2; ++u) t.expect(node_potential(cert, u) == Rational(39, 2), "gadget potential");
  int best = 1 << 30;
  for (int m = 0; m < (1 << n2); ++m) {
    std::vector<int> side(static_cast<std::size_t>(n2));
    for (int u = 0; u < n2; ++u) side[static_cast<std::size_t>(u)] = m >> u & 1;
    auto c = cut_solution_to_cover(side, cert);
    auto rep = verify_cover(inst, 2, c);
    t.expect(rep.valid(), "cover invalid for bipartition " + std::to_string(m));
    int want = 39 * n2 / 2 + uncut_edges(cert.source_edges, side);
    t.expect(static_cast<int>(c.groups.size()) == want, "cover size for bipartition " + std::to_string(m));
    best = std::min(best, static_cast<int>(c.groups.size()));
  }
  t.expect(best == 39 * n2 / 2 + static_cast<int>(g.edge_count()) - oracle::max_cut(g), "best cover vs max cut");
  auto cat = cut_catalogue_check(inst, cert);
  t.expect(cat.unexpected.empty(), "unexpected feasible groups: " + std::to_string(cat.unexpected.size()));
  t.expect(cat.over_potential.empty() && cat.max_potential <= 1, "group potential above 1");
  t.expect(cat.infeasible_squares.empty(), "infeasible gadget squares");
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  t.expect(r.wall_ms < 120000, "runtime over 120 s");
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; individuals " + std::to_string(inst.size()) + ", feasible groups of size >= 3 " +
             std::to_string(cat.feasible_large) + ", max potential " + to_string(cat.max_potential) +
             ", best cover " + std::to_string(best);
  return r;
}

// ---------------------------------------------------------------------------
// 8. independent set to profit coverage

inline CriterionResult criterion_is_mpc(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{8, "profit coverage of regular graphs equals independence number", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K4", complete_graph(4)}, {"C6", cycle_graph(6)}, {"Petersen", petersen_graph()}};
  for (int i = 0; i < 20; ++i) graphs.emplace_back("cubic " + std::to_string(i), gen_random_cubic(4 + 2 * (i % 4), instance_seed(seed, 8000 + i)));
  for (const auto& [name, g] : graphs) {
    auto red = is_to_mpc(g);
    auto sol = mpc_exact(red.system);
    t.expect(verify_mpc(red.system, sol).valid(), "invalid selection on " + name);
    int mis = oracle::max_independent_set(g);
    t.expect(sol.objective == mis, name + ": profit " + to_string(sol.objective) + " vs " + std::to_string(mis));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; graphs " + std::to_string(graphs.size());
  return r;
}

// ---------------------------------------------------------------------------
// 9. profit coverage ratios

inline CriterionResult criterion_mpc_ratio(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{9, "profit coverage set packing, 2-IMP and matching", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  Rational worst_pack = 0, worst_imp = 0;
  for (int i = 0; i < 30; ++i) {
    int m = 6 + i % 7;
    auto sys = gen_random_system(10, m, 3, instance_seed(seed, 9000 + i));
    auto opt = mpc_exact(sys).objective;
    t.expect(opt == oracle::max_profit_coverage(sys), "exact profit disagrees with oracle");
    auto sol = mpc_via_setpacking(sys, 3, 0.1);
    t.expect(verify_mpc(sys, sol).valid(), "invalid set packing selection");
    t.expect(sol.objective * Rational(21, 10) >= opt, "set packing ratio on instance " + std::to_string(i));
    if (sol.objective > 0) worst_pack = std::max(worst_pack, opt / sol.objective);
  }
  for (int i = 0; i < 30; ++i) {
    int m = 6 + i % 7;
    int a = 3 + i % 3;
    auto sys = gen_random_system(10, m, a, instance_seed(seed, 9100 + i));
    auto opt = mpc_exact(sys).objective;
    t.expect(opt == oracle::max_profit_coverage(sys), "exact profit disagrees with oracle");
    auto sol = mpc_2imp(sys);
    t.expect(verify_mpc(sys, sol).valid(), "invalid 2-IMP selection");
    Rational bound = Rational(6454 * sys.max_set_size() + 1000, 10000);
    t.expect(sol.objective * bound >= opt, "2-IMP ratio on instance " + std::to_string(i));
    if (sol.objective > 0) worst_imp = std::max(worst_imp, opt / sol.objective / bound);
  }
  for (int i = 0; i < 30; ++i) {
    int m = 4 + (i * 16) / 29;
    auto sys = gen_random_system(8 + i % 5, m, 2, instance_seed(seed, 9200 + i));
    auto opt = mpc_exact(sys).objective;
    auto sol = mpc_exact_small_a(sys);
    t.expect(verify_mpc(sys, sol).valid() && sol.objective == opt, "matching disagrees on instance " + std::to_string(i));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; worst set packing OPT/ALG " + ratio_text(worst_pack) + ", worst 2-IMP (OPT/ALG)/bound " +
             ratio_text(worst_imp);
  return r;
}

// ---------------------------------------------------------------------------
// 10. densest subgraph and 2-coverage

inline CriterionResult criterion_cov2(std::uint64_t seed) {
  using namespace suite_detail;
  CriterionResult r{10, "2-coverage vs densest subgraph, route dominance, greedy coverage", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int systems = 0;
  auto check_system = [&](const WeightedSetSystem& sys, int k, const std::string& tag) {
    auto ex = cov2_exact(sys, k);
    t.expect(verify_cov2(sys, k, ex).valid(), "invalid exact on " + tag);
    t.expect(ex.objective == oracle::max_two_coverage(sys, k), "exact 2-coverage disagrees with oracle on " + tag);
    if (k >= 2) {
      auto pw = cov2_pairwise(sys, k);
      auto tp = cov2_two_phase(sys, k);
      auto cb = cov2_combined(sys, k);
      for (const auto* s : {&pw, &tp, &cb}) t.expect(verify_cov2(sys, k, *s).valid(), "invalid route on " + tag);
      t.expect(cb.objective >= std::max(pw.objective, tp.objective), "combined below a route on " + tag);
      t.expect(cb.objective <= ex.objective, "combined above exact on " + tag);
    }
    int kk = std::min<int>(k, static_cast<int>(sys.set_count()));
    if (kk >= 1) {
      std::int64_t got = static_cast<std::int64_t>(coverage(sys, maxcov_greedy(sys, kk)));
      std::int64_t opt1 = oracle::max_coverage(sys, kk);
      std::int64_t pk = 1, qk = 1;
      for (int i = 0; i < kk; ++i) {
        pk *= kk;
        qk *= kk - 1;
      }
      t.expect(got * pk >= (pk - qk) * opt1, "greedy coverage bound on " + tag);
    }
    ++systems;
  };
  auto check_graph = [&](const Graph& g, const std::string& tag) {
    auto sys = ds_to_cov2(g);
    for (int k = 1; k <= std::min(4, g.node_count()); ++k) {
      auto ex = cov2_exact(sys, k);
      t.expect(ex.objective == oracle::densest_k_subgraph(g, k), "densest subgraph mismatch on " + tag);
      check_system(sys, k, tag + " k=" + std::to_string(k));
    }
  };
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1u) e.push_back(all[i]);
      check_graph(Graph(n, e), "graph n=" + std::to_string(n) + " mask " + std::to_string(mask));
    }
  }
  for (int i = 0; i < 300; ++i) {
    int n = 6 + i % 3;
    check_graph(gen_random_graph(n, 0.2 + 0.1 * (i % 6), instance_seed(seed, 10000 + i)), "random graph " + std::to_string(i));
  }
  // every isomorphism class up to 8 nodes, through a degree-sorted labeling
  long sweep = 0;
  for (int n = 1; n <= 8; ++n) {
    oracle::for_each_degree_sorted_graph(n, [&](const Graph& g) {
      ++sweep;
      auto sys = ds_to_cov2(g);
      auto best = oracle::densest_profile(g);
      for (int k = 1; k <= std::min(4, n); ++k) {
        auto ex = cov2_exact(sys, k);
        bool ok = ex.objective == best[static_cast<std::size_t>(k)];
        if (k >= 2) {
          auto cb = cov2_combined(sys, k);
          ok = ok && cb.objective <= ex.objective &&
               cb.objective >= std::max(cov2_pairwise(sys, k).objective, cov2_two_phase(sys, k).objective);
        }
        if (ok) {
          ++t.checks;
        } else {
          t.expect(false, "sweep n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    });
  }
  for (int i = 0; i < 50; ++i) {
    auto sys = gen_random_system(10, 4 + i % 7, 2 + i % 4, instance_seed(seed, 10500 + i));
    for (int k = 2; k <= 4; ++k) check_system(sys, k, "system " + std::to_string(i));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.failures == 0;
  r.detail = t.summary() + "; systems checked " + std::to_string(systems) + ", degree-sorted graphs n<=8 " +
             std::to_string(sweep);
  return r;
}

// ---------------------------------------------------------------------------
// Registry

struct CriterionEntry {
  int id;
  std::string name;
  std::function<CriterionResult(std::uint64_t)> run;
};

inline const std::vector<CriterionEntry>& solver_criteria() {
  static const std::vector<CriterionEntry> entries{
      {1, "feasibility", criterion_feasibility_oracle}, {2, "example", criterion_worked_example},
      {3, "triangles", criterion_triangle_ratio},       {4, "cover", criterion_cover_ratio},
      {5, "labelcover", criterion_label_cover},         {6, "gadgets", criterion_gadgets},
      {7, "cut", criterion_cut},                        {8, "ismpc", criterion_is_mpc},
      {9, "mpc", criterion_mpc_ratio},                  {10, "cov2", criterion_cov2},
  };
  return entries;
}

/// Runs the given criteria concurrently, one thread each; results in input order.
inline std::vector<CriterionResult> run_criteria(const std::vector<CriterionEntry>& entries, std::uint64_t seed) {
  std::vector<std::future<CriterionResult>> jobs;
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&e, seed] {
      try {
        return e.run(seed);
      } catch (const std::exception& ex) {
        return CriterionResult{e.id, e.name, false, std::string("exception: ") + ex.what(), 0};
      }
    }));
  }
  std::vector<CriterionResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline std::string result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << " [" << r.name << "] " << r.detail << " ("
     << static_cast<long long>(r.wall_ms) << " ms)";
  return os.str();
}

}  // namespace packcover
