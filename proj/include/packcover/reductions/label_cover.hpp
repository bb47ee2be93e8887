#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"

namespace packcover {

/// Locus = origin node plus an optional edge shrunk to length zero (-1 for none).
struct LabelLocus {
  int origin = 0;
  int edge = -1;
};

struct LabelCoverCertificate {
  int node_count = 0;
  std::vector<LabelLocus> loci;
  int components = 0;
};

namespace detail {

/// 0-1 BFS distances from `origin` with edge `zero` of length 0. Nodes not
/// reachable get -1 - component(v).
inline std::vector<int> zero_one_distances(const Graph& g, int origin, int zero, const std::vector<int>& component) {
  const int n = g.node_count();
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n), inf);
  std::pair<int, int> z{-1, -1};
  if (zero >= 0) z = g.edges()[static_cast<std::size_t>(zero)];
  auto is_zero = [&](int u, int v) { return (u == z.first && v == z.second) || (u == z.second && v == z.first); };
  std::deque<int> dq;
  dist[static_cast<std::size_t>(origin)] = 0;
  dq.push_back(origin);
  while (!dq.empty()) {
    int u = dq.front();
    dq.pop_front();
    for (int v : g.neighbors(u)) {
      int w = is_zero(u, v) ? 0 : 1;
      int nd = dist[static_cast<std::size_t>(u)] + w;
      if (nd < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = nd;
        if (w == 0) {
          dq.push_front(v);
        } else {
          dq.push_back(v);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dist[static_cast<std::size_t>(v)] == inf) dist[static_cast<std::size_t>(v)] = -1 - component[static_cast<std::size_t>(v)];
  }
  return dist;
}

inline std::vector<int> components_of(const Graph& g, int& count) {
  std::vector<int> comp(static_cast<std::size_t>(g.node_count()), -1);
  count = 0;
  for (int s = 0; s < g.node_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace detail

/// One individual per node; |V|·(|E|+1) distance loci. Labels of nodes outside
/// the origin's component are negative and distinct per component.
inline std::pair<LabelCoverInstance, LabelCoverCertificate> tp_to_labelcover(const Graph& g) {
  LabelCoverCertificate cert;
  cert.node_count = g.node_count();
  auto comp = detail::components_of(g, cert.components);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.node_count()));
  for (int a = 0; a < g.node_count(); ++a) {
    for (int e = -1; e < static_cast<int>(g.edge_count()); ++e) {
      auto d = detail::zero_one_distances(g, a, e, comp);
      for (int v = 0; v < g.node_count(); ++v) rows[static_cast<std::size_t>(v)].push_back(d[static_cast<std::size_t>(v)]);
      cert.loci.push_back({a, e});
    }
  }
  int loci = static_cast<int>(cert.loci.size());
  return {LabelCoverInstance(std::move(rows), loci), std::move(cert)};
}

/// Label v becomes (v, v') with a fresh v' for k = 4, and (v, v) for k = 2.
/// Labels are renumbered per locus first so allele ids are nonnegative.
inline SibInstance labelcover_to_allele(const LabelCoverInstance& lc, int k) {
  if (k != 2 && k != 4) throw InvalidInput("allele lift needs k = 2 or k = 4");
  std::vector<std::vector<AllelePair>> rows(static_cast<std::size_t>(lc.size()));
  for (int j = 0; j < lc.locus_count(); ++j) {
    std::map<int, int> code;
    for (int p = 0; p < lc.size(); ++p) code.emplace(lc.label(p, j), 0);
    int next = 0;
    for (auto& [label, c] : code) c = next++;
    for (int p = 0; p < lc.size(); ++p) {
      int c = code.at(lc.label(p, j));
      rows[static_cast<std::size_t>(p)].push_back(k == 4 ? AllelePair{2 * c + 1, 2 * c + 2} : AllelePair{c + 1, c + 1});
    }
  }
  return SibInstance(std::move(rows), lc.locus_count());
}

/// Triangles of the packing as triples, the remaining nodes paired in id
/// order, an odd one out alone: t + ceil((n - 3t)/2) groups.
inline CoverSolution packing_to_label_cover(const PackingSolution& p, int n) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  CoverSolution c;
  for (const auto& m : p.members) {
    auto g = m;
    std::sort(g.begin(), g.end());
    for (int v : g) used[static_cast<std::size_t>(v)] = 1;
    c.groups.push_back(std::move(g));
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  for (std::size_t i = 0; i < rest.size(); i += 2) {
    if (i + 1 < rest.size()) {
      c.groups.push_back({rest[i], rest[i + 1]});
    } else {
      c.groups.push_back({rest[i]});
    }
  }
  c.objective = static_cast<std::int64_t>(c.groups.size());
  return c;
}

/// Every feasible triple is a triangle; from larger groups the first three
/// members are taken.
inline PackingSolution label_cover_to_packing(const CoverSolution& c) {
  PackingSolution p;
  for (const auto& g : c.groups) {
    if (g.size() < 3) continue;
    std::vector<int> t(g.begin(), g.begin() + 3);
    std::sort(t.begin(), t.end());
    p.members.push_back(std::move(t));
  }
  p.objective = static_cast<std::int64_t>(p.members.size());
  return p;
}

inline Json to_json(const LabelCoverCertificate& c) {
  Json loci = Json::array();
  for (const auto& l : c.loci) loci.push_back(Json::array({l.origin + 1, l.edge < 0 ? 0 : l.edge + 1}));
  return Json{{"kind", "tp-to-allele"}, {"node_count", c.node_count}, {"components", c.components}, {"loci", loci}};
}

inline LabelCoverCertificate label_certificate_from_json(const Json& j) {
  if (j.value("kind", "") != "tp-to-allele") throw ParseError("not a tp-to-allele certificate", 0);
  LabelCoverCertificate c;
  c.node_count = j.at("node_count").get<int>();
  c.components = j.at("components").get<int>();
  for (const auto& l : j.at("loci")) c.loci.push_back({l.at(0).get<int>() - 1, l.at(1).get<int>() - 1});
  return c;
}

}  // namespace packcover
