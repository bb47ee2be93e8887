#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/generators.hpp"
#include "packcover/core/types.hpp"

namespace packcover {

/// Ring u_0..u_{14k-1} plus a random perfect matching between the even
/// (white) and odd (black) nodes whose index is not a multiple of 7.
struct Amplifier {
  int k = 0;
  std::vector<std::pair<int, int>> matching;  // (white, black)
  int node_count() const { return 14 * k; }
  static bool is_contact(int u) { return u % 7 == 0; }
  static bool is_white(int u) { return u % 2 == 0; }
  /// Ring edges first (u_i, u_{i+1}), then the matching edges.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    const int n = node_count();
    for (int i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
    out.insert(out.end(), matching.begin(), matching.end());
    return out;
  }
  /// White contacts 0, 14, 28, ...; black contacts 7, 21, ...
  std::vector<int> white_contacts() const {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(14 * i);
    return out;
  }
  std::vector<int> black_contacts() const {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.push_back(14 * i + 7);
    return out;
  }
};

/// Uniform perfect matching between eligible white and black nodes, resampled
/// while it would duplicate a ring edge.
inline Amplifier build_amplifier(int k, std::uint64_t seed, int max_retries = 1000) {
  if (k < 1) throw InvalidInput("amplifier parameter k must be at least 1");
  Amplifier a;
  a.k = k;
  const int n = 14 * k;
  std::vector<int> white, black;
  for (int u = 0; u < n; ++u) {
    if (Amplifier::is_contact(u)) continue;
    (Amplifier::is_white(u) ? white : black).push_back(u);
  }
  std::mt19937_64 rng(seed);
  auto ring_adjacent = [n](int u, int v) { return (u + 1) % n == v || (v + 1) % n == u; };
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<int> b = black;
    shuffle_deterministic(b, rng);
    bool ok = true;
    for (std::size_t i = 0; i < white.size(); ++i) {
      if (ring_adjacent(white[i], b[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    a.matching.clear();
    for (std::size_t i = 0; i < white.size(); ++i) a.matching.emplace_back(white[i], b[i]);
    return a;
  }
  throw Error("no amplifier matching avoiding ring edges found");
}

/// Triangle-packing image of an amplifier: one node per amplifier edge, one
/// triangle per amplifier node. Contact triangles get their third node from
/// the caller (the literal node), so here they list two edge-nodes and -1.
struct AmplifierFragment {
  std::vector<std::pair<int, int>> edge_of_node;  // fragment node -> amplifier edge
  std::vector<std::array<int, 3>> triangle;       // per amplifier node
};

inline AmplifierFragment amplifier_to_tp_fragment(const Amplifier& a) {
  AmplifierFragment f;
  f.edge_of_node = a.edges();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(a.node_count()));
  for (std::size_t e = 0; e < f.edge_of_node.size(); ++e) {
    incident[static_cast<std::size_t>(f.edge_of_node[e].first)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(f.edge_of_node[e].second)].push_back(static_cast<int>(e));
  }
  for (int u = 0; u < a.node_count(); ++u) {
    const auto& inc = incident[static_cast<std::size_t>(u)];
    std::array<int, 3> t{-1, -1, -1};
    for (std::size_t i = 0; i < inc.size() && i < 3; ++i) t[i] = inc[i];
    f.triangle.push_back(t);
  }
  return f;
}

/// Amplifier property on one contact pattern. `selected` marks, per contact
/// (white contacts first, then black), whether its contact triangle is in the
/// packing. Returns the fewest fragment nodes left uncovered by any packing
/// extending the pattern, and the minority count i.
struct AmplifierCheck {
  int uncovered = 0;
  int minority = 0;
};

inline AmplifierCheck amplifier_pattern_check(const Amplifier& a, const std::vector<bool>& selected) {
  const int n = a.node_count();
  auto wc = a.white_contacts();
  auto bc = a.black_contacts();
  std::vector<char> taken(static_cast<std::size_t>(n), 0), blocked(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : a.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  int with_white = 0;
  int taken_count = 0;
  for (int i = 0; i < 2 * a.k; ++i) {
    int c = i < a.k ? wc[static_cast<std::size_t>(i)] : bc[static_cast<std::size_t>(i - a.k)];
    bool sel = selected[static_cast<std::size_t>(i)];
    if (sel == Amplifier::is_white(c)) ++with_white;
    if (sel) {
      taken[static_cast<std::size_t>(c)] = 1;
      ++taken_count;
      for (int v : adj[static_cast<std::size_t>(c)]) blocked[static_cast<std::size_t>(v)] = 1;
    }
  }
  // Free non-contacts form a bipartite graph; max independent set = free - max matching.
  std::vector<int> free_nodes;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int u = 0; u < n; ++u) {
    if (Amplifier::is_contact(u) || blocked[static_cast<std::size_t>(u)]) continue;
    index[static_cast<std::size_t>(u)] = static_cast<int>(free_nodes.size());
    free_nodes.push_back(u);
  }
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int u, std::vector<char>& seen) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (index[static_cast<std::size_t>(v)] < 0 || seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (match[static_cast<std::size_t>(v)] < 0 || augment(match[static_cast<std::size_t>(v)], seen)) {
        match[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u : free_nodes) {
    if (!Amplifier::is_white(u)) continue;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    if (augment(u, seen)) ++matching;
  }
  int mis = static_cast<int>(free_nodes.size()) - matching;
  AmplifierCheck r;
  r.uncovered = 20 * a.k - (2 * taken_count + 3 * mis);
  r.minority = std::min(with_white, 2 * a.k - with_white);
  return r;
}

}  // namespace packcover
