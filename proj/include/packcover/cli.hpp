#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

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
#include "packcover/suite.hpp"

namespace packcover::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kInputError = 3, kBudget = 4 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string algorithm;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget_nodes = 50'000'000;
  std::int64_t budget_ms = 0;
  double eps = 0.1;
  std::string json_path;
  std::vector<std::string> inputs;

  Budget budget() const {
    Budget b;
    b.max_nodes = budget_nodes;
    if (budget_ms > 0) b.time_limit = std::chrono::milliseconds(budget_ms);
    return b;
  }
};

/// "name" or "name:param".
struct AlgoSpec {
  std::string name;
  std::optional<std::string> param;
};

inline AlgoSpec parse_algo(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {text, std::nullopt};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

inline int int_param(const AlgoSpec& a, int fallback, int lo) {
  if (!a.param) return fallback;
  try {
    std::size_t used = 0;
    int v = std::stoi(*a.param, &used);
    if (used != a.param->size() || v < lo) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad parameter '" + *a.param + "' for algorithm " + a.name);
  }
}

inline Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

/// A solver report may be passed where a bare solution is expected.
inline Json unwrap_solution(const Json& j) { return j.contains("solution") ? j.at("solution") : j; }

// ---------------------------------------------------------------------------
// Reports

struct Outcome {
  Json solution;
  VerificationReport report;
};

inline Json make_report(const std::string& instance_digest, const std::string& algorithm, const RunConfig& cfg,
                        const Outcome& o, double wall_ms) {
  Json r{{"instance_digest", instance_digest},
         {"algorithm", algorithm},
         {"seed", cfg.seed},
         {"objective", rational_json(o.report.objective)},
         {"solution", o.solution},
         {"solution_digest", hex_digest(o.solution.dump())},
         {"valid", o.report.valid()},
         {"wall_time_ms", wall_ms}};
  if (!o.report.valid()) r["violations"] = o.report.violations;
  return r;
}

template <typename Solve>
Json timed_report(const std::string& digest, const std::string& algorithm, const RunConfig& cfg, Solve&& solve) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = solve();
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return make_report(digest, algorithm, cfg, o, ms);
}

// ---------------------------------------------------------------------------
// Solver commands, one input file each

inline Json run_tp(const std::string& path, const RunConfig& cfg) {
  auto g = parse_graph(read_file(path));
  auto algo = parse_algo(cfg.algorithm);
  PackOptions opt;
  opt.eps = cfg.eps;
  opt.budget = cfg.budget();
  if (algo.name == "greedy") {
    opt.algo = PackAlgo::greedy;
  } else if (algo.name == "local") {
    opt.algo = PackAlgo::local;
    opt.s = int_param(algo, 2, 1);
  } else if (algo.name == "squareimp") {
    opt.algo = PackAlgo::squareimp;
  } else if (algo.name == "exact") {
    opt.algo = PackAlgo::exact;
  } else {
    throw UsageError("unknown tp algorithm '" + cfg.algorithm + "' (greedy|local:s|squareimp|exact)");
  }
  return timed_report(hex_digest(serialize_graph(g)), cfg.algorithm, cfg, [&] {
    auto sol = pack_triangles(g, opt);
    sol.selected.clear();
    return Outcome{to_json(sol), verify_triangle_packing(g, sol)};
  });
}

inline Json run_sibcover(const std::string& path, const RunConfig& cfg, int k) {
  auto inst = parse_sib_instance(read_file(path));
  auto algo = parse_algo(cfg.algorithm);
  std::function<CoverSolution()> solve;
  int max_group = 0;
  if (algo.name == "threshold") {
    int c = int_param(algo, 3, 1);
    solve = [&, c] { return solve_threshold_greedy(inst, k, c); };
    max_group = c;
  } else if (algo.name == "a3") {
    solve = [&] { return solve_a3(inst, k, cfg.eps); };
    max_group = 3;
  } else if (algo.name == "a4") {
    solve = [&] { return solve_a4(inst, k, cfg.eps); };
    max_group = 4;
  } else if (algo.name == "greedy") {
    int a = int_param(algo, std::min(4, std::max(1, inst.size())), 1);
    solve = [&, a] { return solve_setcover_greedy(inst, k, a); };
    max_group = a;
  } else if (algo.name == "exact") {
    int a = int_param(algo, std::max(1, inst.size()), 1);
    solve = [&, a] { return solve_exact_cover(inst, k, a, cfg.budget()); };
    max_group = a;
  } else {
    throw UsageError("unknown sibcover algorithm '" + cfg.algorithm + "' (threshold:c|a3|a4|greedy[:a]|exact[:a])");
  }
  auto digest = hex_digest(serialize_sib_instance(inst));
  auto report = timed_report(digest, cfg.algorithm, cfg, [&] {
    auto sol = solve();
    return Outcome{to_json(sol), verify_cover(inst, k, sol, max_group)};
  });
  report["k"] = k;
  return report;
}

struct MpcFlags {
  double alpha = 2.0;
  double delta = 1.0;
};

inline Json run_mpc(const std::string& path, const RunConfig& cfg, const MpcFlags& flags) {
  auto sys = parse_set_system(read_file(path));
  auto algo = parse_algo(cfg.algorithm);
  std::function<MpcSolution()> solve;
  if (algo.name == "exact2") {
    solve = [&] { return mpc_exact_small_a(sys); };
  } else if (algo.name == "pack") {
    int a = int_param(algo, std::max(1, sys.max_set_size()), 1);
    solve = [&, a] { return mpc_via_setpacking(sys, a, cfg.eps); };
  } else if (algo.name == "greedy") {
    solve = [&] { return mpc_greedy(sys); };
  } else if (algo.name == "2imp") {
    if (!(flags.alpha > 1) || !(flags.delta > 0)) throw UsageError("2imp needs alpha > 1 and delta > 0");
    TwoImpParams p;
    p.alpha = flags.alpha;
    p.delta = flags.delta;
    p.eps = cfg.eps;
    solve = [&, p] { return mpc_2imp(sys, p); };
  } else if (algo.name == "exact") {
    solve = [&] { return mpc_exact(sys, cfg.budget()); };
  } else {
    throw UsageError("unknown mpc algorithm '" + cfg.algorithm + "' (exact2|pack:a|greedy|2imp|exact)");
  }
  return timed_report(hex_digest(serialize_set_system(sys)), cfg.algorithm, cfg, [&] {
    auto sol = solve();
    return Outcome{to_json(sol), verify_mpc(sys, sol)};
  });
}

inline Json run_cov2(const std::string& path, const RunConfig& cfg, int k) {
  auto sys = parse_set_system(read_file(path));
  std::function<Cov2Solution()> solve;
  const auto& a = cfg.algorithm;
  if (a == "pairwise") {
    solve = [&] { return cov2_pairwise(sys, k); };
  } else if (a == "twophase") {
    solve = [&] { return cov2_two_phase(sys, k); };
  } else if (a == "combined") {
    solve = [&] { return cov2_combined(sys, k); };
  } else if (a == "exact") {
    solve = [&] { return cov2_exact(sys, k, cfg.budget()); };
  } else {
    throw UsageError("unknown cov2 algorithm '" + a + "' (pairwise|twophase|combined|exact)");
  }
  auto report = timed_report(hex_digest(serialize_set_system(sys)), a, cfg, [&] {
    auto sol = solve();
    return Outcome{to_json(sol), verify_cov2(sys, k, sol)};
  });
  report["k"] = k;
  return report;
}

inline std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw UsageError("");
      ids.push_back(v - 1);
    } catch (const std::exception&) {
      throw UsageError("bad id '" + tok + "' in group list");
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline Json run_sibcheck(const std::string& path, int k, const std::string& group_text) {
  auto inst = parse_sib_instance(read_file(path));
  auto group = parse_id_list(group_text);
  bool feasible = check_group(inst, group, k);
  Json r{{"instance_digest", hex_digest(serialize_sib_instance(inst))},
         {"k", k},
         {"group", detail::one_based(group)},
         {"feasible", feasible}};
  if (k == 2 && feasible) {
    auto w = witness_2allele(inst, group);
    if (!w || !witness_is_sound(inst, group, *w)) throw Error("witness failed its own check");
    Json swapped = Json::array();
    for (const auto& row : w->swapped) swapped.push_back(row);
    r["witness"] = Json{{"father", w->father}, {"mother", w->mother}, {"swapped", swapped}};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reductions

struct ReduceFlags {
  int m = 1;
  int k = 4;
  bool metric = false;
  std::string radius = "1";
  std::string out;
};

inline Json graph_edges_json(const Graph& g) {
  Json e = Json::array();
  for (auto [u, v] : g.edges()) e.push_back(Json::array({u + 1, v + 1}));
  return e;
}

inline Graph graph_from_cert(const Json& j) {
  std::vector<std::pair<int, int>> e;
  for (const auto& p : j.at("edges")) e.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
  return Graph(j.at("node_count").get<int>(), e);
}

inline Json run_reduce(const std::string& kind, const std::string& path, const RunConfig& cfg, const ReduceFlags& f) {
  std::string source = read_file(path);
  std::string target_text;
  std::string ext;
  Json cert;
  Json summary;
  if (kind == "lin2-to-tp") {
    auto sys = parse_lin2(source);
    if (f.m < 1) throw UsageError("--m must be at least 1");
    auto [g, c] = lin2_to_tp(sys, f.m, cfg.seed);
    target_text = serialize_graph(g);
    ext = "graph";
    cert = to_json(c);
    summary = Json{{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"m_S", c.m_s}, {"warnings", c.warnings}};
  } else if (kind == "tp-to-allele" || kind == "color-to-allele") {
    auto g = parse_graph(source);
    if (f.k != 2 && f.k != 4) throw UsageError("--k must be 2 or 4");
    SibInstance inst;
    if (kind == "tp-to-allele") {
      auto [lc, c] = tp_to_labelcover(g);
      inst = labelcover_to_allele(lc, f.k);
      cert = to_json(c);
    } else {
      auto [in, c] = coloring_to_allele(g, f.k);
      inst = std::move(in);
      cert = to_json(c);
    }
    cert["k"] = f.k;
    target_text = serialize_sib_instance(inst);
    ext = "tsv";
    summary = Json{{"individuals", inst.size()}, {"loci", inst.locus_count()}};
  } else if (kind == "cut-to-allele") {
    auto g = parse_graph(source);
    auto [inst, c] = cut_to_allele(g);
    target_text = serialize_sib_instance(inst);
    ext = "tsv";
    cert = to_json(c);
    summary = Json{{"individuals", inst.size()}, {"loci", inst.locus_count()}, {"lower_bound", 39 * g.node_count() / 2.0}};
  } else if (kind == "is-to-mpc") {
    auto g = parse_graph(source);
    auto radius = parse_rational(f.radius);
    auto r = is_to_mpc(g, f.metric, radius);
    target_text = serialize_set_system(r.system);
    ext = "sys";
    cert = Json{{"kind", "is-to-mpc"}, {"degree", r.degree}, {"node_count", g.node_count()}, {"edges", graph_edges_json(g)}};
    if (r.metric) cert["metric"] = to_json(*r.metric);
    summary = Json{{"elements", r.system.universe_size()}, {"sets", r.system.set_count()}, {"set_cost", r.degree - 1}};
  } else if (kind == "ds-to-cov2") {
    auto g = parse_graph(source);
    if (f.k < 1) throw UsageError("--k must be positive");
    auto sys = ds_to_cov2(g);
    target_text = serialize_set_system(sys);
    ext = "sys";
    cert = Json{{"kind", "ds-to-cov2"}, {"k", f.k}, {"node_count", g.node_count()}, {"edges", graph_edges_json(g)}};
    summary = Json{{"elements", sys.universe_size()}, {"sets", sys.set_count()}, {"frequency", sys.max_frequency()}};
  } else {
    throw UsageError("unknown reduction '" + kind +
                     "' (lin2-to-tp|tp-to-allele|cut-to-allele|color-to-allele|is-to-mpc|ds-to-cov2)");
  }
  std::string prefix = f.out.empty() ? path + "." + kind : f.out;
  std::string inst_path = prefix + "." + ext;
  std::string cert_path = prefix + ".cert.json";
  std::string cert_text = cert.dump(1) + "\n";
  write_file(inst_path, target_text);
  write_file(cert_path, cert_text);
  return Json{{"reduction", kind},
              {"seed", cfg.seed},
              {"source_digest", hex_digest(source)},
              {"instance", inst_path},
              {"instance_digest", hex_digest(target_text)},
              {"certificate", cert_path},
              {"certificate_digest", hex_digest(cert_text)},
              {"summary", summary}};
}

// ---------------------------------------------------------------------------
// Transport and normalization

inline std::vector<int> int_list(const Json& j) { return j.get<std::vector<int>>(); }

inline Json vertex_set_json(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  return Json{{"kind", "vertex-set"}, {"vertices", detail::one_based(vs)}, {"objective", vs.size()}};
}

inline Json run_transport(const Json& cert, const Json& sol_in) {
  const Json sol = unwrap_solution(sol_in);
  const std::string kind = cert.value("kind", "");
  const std::string skind = sol.value("kind", "");
  auto mismatch = [&] { return InvalidInput("cannot transport a '" + skind + "' solution through a " + kind + " certificate"); };
  if (kind == "lin2-to-tp") {
    auto c = lin2_certificate_from_json(cert);
    if (skind == "assignment") {
      auto a = int_list(sol.at("values"));
      if (static_cast<int>(a.size()) != c.variable_count) throw InvalidInput("assignment length mismatch");
      return to_json(lin2_solution_to_packing(a, c));
    }
    if (skind == "packing") {
      auto a = packing_to_assignment(packing_from_json(sol), c);
      return Json{{"kind", "assignment"}, {"values", a}};
    }
    throw mismatch();
  }
  if (kind == "tp-to-allele") {
    auto c = label_certificate_from_json(cert);
    if (skind == "packing") return to_json(packing_to_label_cover(packing_from_json(sol), c.node_count));
    if (skind == "cover") return to_json(label_cover_to_packing(cover_from_json(sol)));
    throw mismatch();
  }
  if (kind == "cut-to-allele") {
    auto c = cut_certificate_from_json(cert);
    if (skind != "bipartition") throw mismatch();
    auto side = int_list(sol.at("sides"));
    if (static_cast<int>(side.size()) != c.source_nodes) throw InvalidInput("bipartition length mismatch");
    auto cover = cut_solution_to_cover(side, c);
    auto j = to_json(cover);
    j["uncut_edges"] = uncut_edges(c.source_edges, side);
    return j;
  }
  if (kind == "color-to-allele") {
    auto c = coloring_certificate_from_json(cert);
    if (skind == "coloring") {
      auto colors = int_list(sol.at("colors"));
      return to_json(coloring_to_cover(colors, c));
    }
    if (skind == "cover") {
      auto colors = cover_to_coloring(cover_from_json(sol), c);
      for (int& x : colors) ++x;
      int used = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
      return Json{{"kind", "coloring"}, {"colors", colors}, {"objective", used}};
    }
    throw mismatch();
  }
  if (kind == "is-to-mpc" || kind == "ds-to-cov2") {
    auto g = graph_from_cert(cert);
    if (skind == "vertex-set") {
      auto vs = detail::zero_based(sol.at("vertices"));
      std::vector<std::size_t> sel(vs.begin(), vs.end());
      std::sort(sel.begin(), sel.end());
      if (kind == "is-to-mpc") {
        MpcSolution m;
        m.selected = sel;
        auto sys = is_to_mpc(g).system;
        m.objective = mpc_profit(sys, sel);
        return to_json(m);
      }
      auto sys = ds_to_cov2(g);
      return to_json(make_cov2_solution(sys, sel));
    }
    if (kind == "is-to-mpc" && skind == "mpc") {
      // drop any vertex adjacent to one already kept
      std::vector<int> keep;
      for (auto s : mpc_from_json(sol).selected) {
        int v = static_cast<int>(s);
        if (std::none_of(keep.begin(), keep.end(), [&](int u) { return g.has_edge(u, v); })) keep.push_back(v);
      }
      return vertex_set_json(keep);
    }
    if (kind == "ds-to-cov2" && skind == "cov2") {
      std::vector<int> vs;
      for (auto s : cov2_from_json(sol).selected) vs.push_back(static_cast<int>(s));
      auto j = vertex_set_json(vs);
      int induced = 0;
      for (auto [u, v] : g.edges())
        induced += (std::count(vs.begin(), vs.end(), u) && std::count(vs.begin(), vs.end(), v)) ? 1 : 0;
      j["induced_edges"] = induced;
      return j;
    }
    throw mismatch();
  }
  throw InvalidInput("unknown certificate kind '" + kind + "'");
}

inline Json run_normalize(const Json& cert, const Json& packing) {
  auto c = lin2_certificate_from_json(cert);
  auto p = packing_from_json(unwrap_solution(packing));
  auto q = normalize_packing(p, c);
  auto j = to_json(q);
  j["input_size"] = p.members.size();
  j["assignment"] = packing_to_assignment(q, c);
  return j;
}

// ---------------------------------------------------------------------------
// Verification of a stored solution

inline Json run_verify(const std::string& instance_path, const Json& sol_in, int k, int max_group) {
  const Json sol = unwrap_solution(sol_in);
  const std::string skind = sol.value("kind", "");
  std::string text = read_file(instance_path);
  VerificationReport rep;
  if (skind == "packing") {
    auto p = packing_from_json(sol);
    if (!p.selected.empty() && p.members.empty()) throw InvalidInput("packing needs its members to be checked");
    rep = verify_triangle_packing(parse_graph(text), p);
  } else if (skind == "cover") {
    if (k != 2 && k != 4) k = sol_in.value("k", 0);
    if (k != 2 && k != 4) throw UsageError("verify of a cover needs --k 2 or --k 4");
    rep = verify_cover(parse_sib_instance(text), k, cover_from_json(sol), max_group);
  } else if (skind == "mpc") {
    rep = verify_mpc(parse_set_system(text), mpc_from_json(sol));
  } else if (skind == "cov2") {
    if (k < 1) k = sol_in.value("k", 0);
    if (k < 1) throw UsageError("verify of a 2-coverage solution needs --k");
    rep = verify_cov2(parse_set_system(text), k, cov2_from_json(sol));
  } else {
    throw InvalidInput("unknown solution kind '" + skind + "'");
  }
  return Json{{"kind", skind}, {"valid", rep.valid()}, {"objective", rational_json(rep.objective)}, {"violations", rep.violations}};
}

// ---------------------------------------------------------------------------
// Determinism check and suites

inline std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Drops wall-clock fields so two runs can be compared byte for byte.
inline Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

inline CriterionResult criterion_determinism(std::uint64_t seed) {
  CriterionResult r{11, "identical seed and config give identical digests", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() /
             ("packcover-determinism-" + std::to_string(seed) + "-" +
              std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()) % 1000000));
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  write_file(file("g.graph"), serialize_graph(gen_random_graph(11, 0.45, splitmix64(seed + 1))));
  write_file(file("k4.graph"), serialize_graph(complete_graph(4)));
  write_file(file("c6.graph"), serialize_graph(cycle_graph(6)));
  write_file(file("s.tsv"), serialize_sib_instance(gen_family_sib(9, 3, 5, 2, splitmix64(seed + 2))));
  write_file(file("m.sys"), serialize_set_system(gen_random_system(10, 10, 4, splitmix64(seed + 3))));
  write_file(file("m2.sys"), serialize_set_system(gen_random_system(10, 12, 2, splitmix64(seed + 4))));
  write_file(file("e.lin2"), serialize_lin2(gen_random_lin2(4, 2, splitmix64(seed + 5))));
  write_file(file("assign.json"), Json{{"kind", "assignment"}, {"values", {1, 0, 1, 0}}}.dump());
  write_file(file("sides.json"), Json{{"kind", "bipartition"}, {"sides", {0, 1, 0, 1}}}.dump());
  const std::string s = " --seed " + std::to_string(seed);
  std::vector<std::string> commands{
      "sibcheck --k 2 --group 1,2,3 " + file("s.tsv"),
      "tp --algo greedy " + file("g.graph"),
      "tp --algo local:2 " + file("g.graph"),
      "tp --algo exact " + file("g.graph"),
      "sibcover --k 4 --algo threshold:3 " + file("s.tsv"),
      "sibcover --k 2 --algo a3 " + file("s.tsv"),
      "sibcover --k 4 --algo a4 " + file("s.tsv"),
      "sibcover --k 4 --algo greedy " + file("s.tsv"),
      "sibcover --k 2 --algo exact " + file("s.tsv"),
      "mpc --algo exact2 " + file("m2.sys"),
      "mpc --algo pack:4 " + file("m.sys"),
      "mpc --algo greedy " + file("m.sys"),
      "mpc --algo 2imp " + file("m.sys"),
      "mpc --algo exact " + file("m.sys"),
      "cov2 --k 4 --algo pairwise " + file("m.sys"),
      "cov2 --k 4 --algo twophase " + file("m.sys"),
      "cov2 --k 4 --algo combined " + file("m.sys"),
      "cov2 --k 4 --algo exact " + file("m.sys"),
      "tp --algo local:2 " + file("g.graph") + " " + file("k4.graph") + " " + file("c6.graph"),
      "reduce lin2-to-tp --m 1 --out " + file("r1") + " " + file("e.lin2"),
      "reduce tp-to-allele --k 4 --out " + file("r2") + " " + file("k4.graph"),
      "reduce cut-to-allele --out " + file("r3") + " " + file("k4.graph"),
      "reduce color-to-allele --k 2 --out " + file("r4") + " " + file("c6.graph"),
      "reduce is-to-mpc --metric --out " + file("r5") + " " + file("c6.graph"),
      "reduce ds-to-cov2 --k 3 --out " + file("r6") + " " + file("k4.graph"),
      "transport --cert " + file("r1.cert.json") + " --solution " + file("assign.json"),
      "transport --cert " + file("r3.cert.json") + " --solution " + file("sides.json"),
  };
  int mismatches = 0, failures = 0, compared = 0;
  std::string first;
  for (const auto& c : commands) {
    std::string outputs[2];
    for (auto& o : outputs) {
      std::ostringstream os, es;
      int code = run_cli(split_args(c + s), os, es);
      if (code != 0) {
        ++failures;
        if (first.empty()) first = c + ": exit " + std::to_string(code) + " " + es.str();
      }
      o = os.str();
    }
    try {
      auto a = strip_timing(Json::parse(outputs[0]));
      auto b = strip_timing(Json::parse(outputs[1]));
      ++compared;
      if (a.dump() != b.dump()) {
        ++mismatches;
        if (first.empty()) first = c + ": outputs differ";
      }
    } catch (const std::exception& e) {
      ++failures;
      if (first.empty()) first = c + ": " + e.what();
    }
  }
  // a packing from the reduced graph, normalized twice
  {
    std::ostringstream os, es;
    int code = run_cli(split_args("tp --algo greedy --json " + file("p.json") + " " + file("r1.graph")), os, es);
    std::string n1, n2;
    for (auto* o : {&n1, &n2}) {
      std::ostringstream no, ne;
      code |= run_cli(split_args("normalize --cert " + file("r1.cert.json") + " " + file("p.json")), no, ne);
      *o = no.str();
    }
    ++compared;
    if (code != 0 || n1 != n2 || n1.empty()) {
      ++mismatches;
      if (first.empty()) first = "normalize differs or failed";
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.passed = mismatches == 0 && failures == 0;
  r.detail = std::to_string(compared) + " commands compared, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(failures) + " failures";
  if (!first.empty()) r.detail += "; " + first;
  return r;
}

inline std::vector<CriterionEntry> all_criteria() {
  auto v = solver_criteria();
  v.push_back({11, "determinism", criterion_determinism});
  return v;
}

inline const std::map<std::string, std::vector<int>>& suite_table() {
  static const std::map<std::string, std::vector<int>> table{
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
      {"feasibility", {1, 2}},
      {"ratios", {3, 4, 9, 10}},
      {"reductions", {5, 6, 7, 8}},
      {"gadgets", {6}},
      {"cut", {7}},
      {"labelcover", {5}},
      {"ismpc", {8}},
      {"cov2", {10}},
      {"determinism", {11}},
  };
  return table;
}

inline std::vector<CriterionResult> run_suite(const std::string& name, std::uint64_t seed) {
  auto it = suite_table().find(name);
  if (it == suite_table().end()) throw UsageError("unknown suite '" + name + "'");
  std::vector<CriterionEntry> chosen;
  for (const auto& e : all_criteria()) {
    if (std::count(it->second.begin(), it->second.end(), e.id)) chosen.push_back(e);
  }
  return run_criteria(chosen, seed);
}

// ---------------------------------------------------------------------------
// Entry point

/// Runs fn over every input concurrently; a single input yields its report,
/// several yield an array in input order.
inline Json run_batch(const std::vector<std::string>& inputs, const std::function<Json(const std::string&)>& fn) {
  if (inputs.size() == 1) return fn(inputs.front());
  std::vector<std::future<Json>> jobs;
  for (const auto& in : inputs) jobs.push_back(std::async(std::launch::async, fn, in));
  Json arr = Json::array();
  for (auto& j : jobs) arr.push_back(j.get());
  return arr;
}

inline bool all_valid(const Json& j) {
  if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const Json& x) { return all_valid(x); });
  return j.value("valid", true);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Sibling-cover, packing and coverage solvers with hardness-reduction tooling", "packcover"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--budget-nodes", cfg.budget_nodes, "Search-node budget for exact solvers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget-ms", cfg.budget_ms, "Time budget for exact solvers in milliseconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--eps", cfg.eps, "Local-search slack")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--json", cfg.json_path, "Write the JSON output to this file instead of stdout");

  int k = 0;
  std::string group;
  auto* sibcheck = app.add_subcommand("sibcheck", "Check an individual group against the allele condition");
  sibcheck->add_option("--k", k, "2 or 4")->required()->check(CLI::IsMember({2, 4}));
  sibcheck->add_option("--group", group, "Comma-separated 1-based individual ids")->required();
  sibcheck->add_option("input", cfg.inputs, "Genotype TSV")->required();

  auto* tp = app.add_subcommand("tp", "Triangle packing");
  tp->add_option("--algo", cfg.algorithm, "greedy|local:s|squareimp|exact")->default_val("local:2");
  tp->add_option("inputs", cfg.inputs, "Graph files")->required();

  auto* sibcover = app.add_subcommand("sibcover", "Minimum full-sibling cover");
  sibcover->add_option("--k", k, "2 or 4")->required()->check(CLI::IsMember({2, 4}));
  sibcover->add_option("--algo", cfg.algorithm, "threshold:c|a3|a4|greedy[:a]|exact[:a]")->default_val("a3");
  sibcover->add_option("inputs", cfg.inputs, "Genotype TSV files")->required();

  MpcFlags mflags;
  auto* mpc = app.add_subcommand("mpc", "Maximum profit coverage");
  mpc->add_option("--algo", cfg.algorithm, "exact2|pack:a|greedy|2imp|exact")->default_val("2imp");
  mpc->add_option("--alpha", mflags.alpha, "2-IMP potential exponent")->capture_default_str();
  mpc->add_option("--delta", mflags.delta, "2-IMP minimum potential gain")->capture_default_str();
  mpc->add_option("inputs", cfg.inputs, "Set-system files")->required();

  auto* cov2 = app.add_subcommand("cov2", "Maximum 2-coverage with at most k sets");
  cov2->add_option("--k", k, "Number of sets")->required()->check(CLI::PositiveNumber);
  cov2->add_option("--algo", cfg.algorithm, "pairwise|twophase|combined|exact")->default_val("combined");
  cov2->add_option("inputs", cfg.inputs, "Set-system files")->required();

  ReduceFlags rflags;
  std::string reduction;
  auto* reduce = app.add_subcommand("reduce", "Build a reduction target instance and its certificate");
  reduce->add_option("reduction", reduction,
                     "lin2-to-tp|tp-to-allele|cut-to-allele|color-to-allele|is-to-mpc|ds-to-cov2")
      ->required();
  reduce->add_option("input", cfg.inputs, "Source instance")->required()->expected(1);
  reduce->add_option("--m", rflags.m, "Replication parameter for lin2-to-tp")->capture_default_str();
  reduce->add_option("--k", rflags.k, "Allele condition for the allele lifts, set count for ds-to-cov2")
      ->capture_default_str();
  reduce->add_flag("--metric", rflags.metric, "is-to-mpc: also emit the point/ball presentation");
  reduce->add_option("--radius", rflags.radius, "is-to-mpc: edge length of the metric")->capture_default_str();
  reduce->add_option("--out", rflags.out, "Output prefix (default: <input>.<reduction>)");

  std::string cert_path, solution_path;
  auto* transport = app.add_subcommand("transport", "Map a solution through a reduction certificate");
  transport->add_option("--cert", cert_path, "Certificate JSON")->required();
  transport->add_option("--solution", solution_path, "Solution JSON")->required();

  auto* normalize = app.add_subcommand("normalize", "Normalize a triangle packing of a lin2-to-tp instance");
  normalize->add_option("--cert", cert_path, "lin2-to-tp certificate")->required();
  normalize->add_option("packing", solution_path, "Packing JSON")->required();

  std::string instance_path;
  int max_group = 0;
  auto* verify = app.add_subcommand("verify", "Check a stored solution against an instance");
  verify->add_option("--instance", instance_path, "Instance file")->required();
  verify->add_option("--solution", solution_path, "Solution or report JSON")->required();
  verify->add_option("--k", k, "Allele condition (covers) or set budget (2-coverage)");
  verify->add_option("--max-group", max_group, "Largest allowed group (covers)");

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Run an acceptance suite; no name lists the suites");
  suite->add_option("name", suite_name, "Suite name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "packcover: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto emit = [&](const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (cfg.json_path.empty()) {
      out << text;
    } else {
      write_file(cfg.json_path, text);
    }
  };

  try {
    if (sibcheck->parsed()) {
      emit(run_sibcheck(cfg.inputs.front(), k, group));
    } else if (tp->parsed()) {
      auto j = run_batch(cfg.inputs, [&](const std::string& p) { return run_tp(p, cfg); });
      emit(j);
      return all_valid(j) ? kOk : kInvalid;
    } else if (sibcover->parsed()) {
      auto j = run_batch(cfg.inputs, [&](const std::string& p) { return run_sibcover(p, cfg, k); });
      emit(j);
      return all_valid(j) ? kOk : kInvalid;
    } else if (mpc->parsed()) {
      auto j = run_batch(cfg.inputs, [&](const std::string& p) { return run_mpc(p, cfg, mflags); });
      emit(j);
      return all_valid(j) ? kOk : kInvalid;
    } else if (cov2->parsed()) {
      auto j = run_batch(cfg.inputs, [&](const std::string& p) { return run_cov2(p, cfg, k); });
      emit(j);
      return all_valid(j) ? kOk : kInvalid;
    } else if (reduce->parsed()) {
      emit(run_reduce(reduction, cfg.inputs.front(), cfg, rflags));
    } else if (transport->parsed()) {
      emit(run_transport(read_json(cert_path), read_json(solution_path)));
    } else if (normalize->parsed()) {
      emit(run_normalize(read_json(cert_path), read_json(solution_path)));
    } else if (verify->parsed()) {
      auto j = run_verify(instance_path, read_json(solution_path), k, max_group);
      emit(j);
      if (!j.at("valid").get<bool>()) {
        for (const auto& v : j.at("violations")) err << "violation: " << v.get<std::string>() << "\n";
        return kInvalid;
      }
    } else if (suite->parsed()) {
      if (suite_name.empty()) {
        for (const auto& [name, ids] : suite_table()) {
          out << name << ":";
          for (int id : ids) out << " " << id;
          out << "\n";
        }
        return kOk;
      }
      auto results = run_suite(suite_name, cfg.seed);
      Json summary = Json::array();
      bool ok = true;
      for (const auto& r : results) {
        out << result_line(r) << "\n";
        summary.push_back(to_json(r));
        ok = ok && r.passed;
      }
      if (!cfg.json_path.empty()) write_file(cfg.json_path, summary.dump(2) + "\n");
      return ok ? kOk : kInvalid;
    }
  } catch (const UsageError& e) {
    err << "packcover: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "packcover: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "packcover: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "packcover: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "packcover: malformed JSON: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace packcover::cli
