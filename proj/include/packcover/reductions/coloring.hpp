#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/reductions/label_cover.hpp"

namespace packcover {

struct ColoringCertificate {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  int edge_loci = 0;          // one per edge, in edge order
  int distinctness_loci = 0;  // appended after the edge loci
};

/// One individual per vertex. Edge {i,j} gets a locus with labels a, b on
/// i, j and c elsewhere, which forbids every triple anchored at {i,j}. Rows
/// that coincide are then split by loci that single out one individual.
inline std::pair<LabelCoverInstance, ColoringCertificate> coloring_to_labelcover(const Graph& g) {
  const int n = g.node_count();
  ColoringCertificate cert;
  cert.node_count = n;
  cert.edges = g.edges();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (auto [i, j] : g.edges()) {
    for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)].push_back(v == i ? 0 : (v == j ? 1 : 2));
  }
  cert.edge_loci = static_cast<int>(g.edge_count());
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[rows[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<int> singled;
  for (const auto& [row, members] : classes) singled.insert(singled.end(), members.begin() + 1, members.end());
  std::sort(singled.begin(), singled.end());
  for (int s : singled) {
    for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)].push_back(v == s ? 1 : 0);
  }
  cert.distinctness_loci = static_cast<int>(singled.size());
  int loci = cert.edge_loci + cert.distinctness_loci;
  return {LabelCoverInstance(std::move(rows), loci), std::move(cert)};
}

inline std::pair<SibInstance, ColoringCertificate> coloring_to_allele(const Graph& g, int k = 4) {
  auto [lc, cert] = coloring_to_labelcover(g);
  return {labelcover_to_allele(lc, k), std::move(cert)};
}

/// Colour classes as groups, in colour order.
inline CoverSolution coloring_to_cover(const std::vector<int>& coloring, const ColoringCertificate& cert) {
  if (static_cast<int>(coloring.size()) != cert.node_count) throw InvalidInput("coloring size mismatch");
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < cert.node_count; ++v) classes[coloring[static_cast<std::size_t>(v)]].push_back(v);
  CoverSolution c;
  for (auto& [color, members] : classes) c.groups.push_back(std::move(members));
  c.objective = static_cast<std::int64_t>(c.groups.size());
  return c;
}

/// Group index d times the 0/1 colour c of the monochromatic matching,
/// compacted to 0.. in order of first appearance. At most 2·|groups| colours.
inline std::vector<int> cover_to_coloring(const CoverSolution& cover, const ColoringCertificate& cert) {
  const int n = cert.node_count;
  std::vector<int> group(static_cast<std::size_t>(n), -1);
  for (std::size_t gi = 0; gi < cover.groups.size(); ++gi) {
    for (int v : cover.groups[gi]) {
      if (v < 0 || v >= n) throw InvalidInput("cover member out of range");
      if (group[static_cast<std::size_t>(v)] < 0) group[static_cast<std::size_t>(v)] = static_cast<int>(gi);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (group[static_cast<std::size_t>(v)] < 0) throw InvalidInput("vertex " + std::to_string(v + 1) + " not covered");
  }
  std::vector<int> half(static_cast<std::size_t>(n), 0);
  std::vector<int> mono_degree(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : cert.edges) {
    if (group[static_cast<std::size_t>(i)] != group[static_cast<std::size_t>(j)]) continue;
    if (++mono_degree[static_cast<std::size_t>(i)] > 1 || ++mono_degree[static_cast<std::size_t>(j)] > 1)
      throw InvalidInput("monochromatic edges do not form a matching; the cover is not feasible");
    half[static_cast<std::size_t>(std::max(i, j))] = 1;
  }
  std::map<std::pair<int, int>, int> compact;
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto key = std::pair{group[static_cast<std::size_t>(v)], half[static_cast<std::size_t>(v)]};
    auto it = compact.emplace(key, static_cast<int>(compact.size())).first;
    color[static_cast<std::size_t>(v)] = it->second;
  }
  return color;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.node_count()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return coloring[static_cast<std::size_t>(e.first)] == coloring[static_cast<std::size_t>(e.second)];
  });
}

inline Json to_json(const ColoringCertificate& c) {
  Json edges = Json::array();
  for (auto [u, v] : c.edges) edges.push_back(Json::array({u, v}));
  return Json{{"kind", "color-to-allele"},
              {"node_count", c.node_count},
              {"edges", edges},
              {"edge_loci", c.edge_loci},
              {"distinctness_loci", c.distinctness_loci}};
}

inline ColoringCertificate coloring_certificate_from_json(const Json& j) {
  if (j.value("kind", "") != "color-to-allele") throw ParseError("not a color-to-allele certificate", 0);
  ColoringCertificate c;
  c.node_count = j.at("node_count").get<int>();
  for (const auto& e : j.at("edges")) c.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  c.edge_loci = j.at("edge_loci").get<int>();
  c.distinctness_loci = j.at("distinctness_loci").get<int>();
  return c;
}

}  // namespace packcover
