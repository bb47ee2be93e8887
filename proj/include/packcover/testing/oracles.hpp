#pragma once

// Brute-force reference solvers. Nothing here calls into the solver headers;
// each one enumerates its search space directly so it can serve as an
// independent check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "packcover/core/types.hpp"

namespace packcover::oracle {

/// 2-allele feasibility by trying every orientation of every pair at every locus.
inline bool orientation_feasible(const SibInstance& inst, const std::vector<int>& group) {
  const auto g = group.size();
  if (g > 20) throw InvalidInput("orientation oracle limited to 20 individuals");
  for (int j = 0; j < inst.locus_count(); ++j) {
    bool found = false;
    for (std::uint32_t flips = 0; flips < (1u << g) && !found; ++flips) {
      std::set<int> first, second;
      for (std::size_t i = 0; i < g; ++i) {
        const auto& p = inst.at(group[i], j);
        bool f = (flips >> i) & 1u;
        first.insert(f ? p.second : p.first);
        second.insert(f ? p.first : p.second);
      }
      found = first.size() <= 2 && second.size() <= 2;
    }
    if (!found) return false;
  }
  return true;
}

inline bool four_allele_feasible(const SibInstance& inst, const std::vector<int>& group) {
  for (int j = 0; j < inst.locus_count(); ++j) {
    std::set<int> alleles;
    for (int p : group) {
      alleles.insert(inst.at(p, j).first);
      alleles.insert(inst.at(p, j).second);
    }
    if (alleles.size() > 4) return false;
  }
  return true;
}

inline bool group_feasible(const SibInstance& inst, const std::vector<int>& group, int k) {
  return k == 2 ? orientation_feasible(inst, group) : four_allele_feasible(inst, group);
}

/// Minimum number of feasible groups of size <= max_group partitioning all
/// individuals. Plain recursion on the lowest unassigned individual.
inline int min_sibling_cover(int n, int max_group, const std::function<bool(const std::vector<int>&)>& feasible) {
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int best = n;
  std::vector<int> group;
  std::function<void(int)> cover;
  std::function<void(int, int, int)> extend = [&](int start, int count, int low) {
    if (count + 1 >= best) return;
    // close the current group
    for (int p : group) used[static_cast<std::size_t>(p)] = 1;
    cover(count + 1);
    for (int p : group) used[static_cast<std::size_t>(p)] = 0;
    if (static_cast<int>(group.size()) == max_group) return;
    for (int q = start; q < n; ++q) {
      if (used[static_cast<std::size_t>(q)]) continue;
      group.push_back(q);
      if (feasible(group)) extend(q + 1, count, low);
      group.pop_back();
    }
  };
  cover = [&](int count) {
    int low = 0;
    while (low < n && used[static_cast<std::size_t>(low)]) ++low;
    if (low == n) {
      best = std::min(best, count);
      return;
    }
    if (count >= best) return;
    auto saved = group;
    group = {low};
    extend(low + 1, count, low);
    group = saved;
  };
  cover(0);
  return best;
}

/// Maximum number of node-disjoint triangles.
inline int max_triangle_packing(const Graph& g) {
  const int n = g.node_count();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  int best = 0;
  std::function<void(int, int)> rec = [&](int v, int count) {
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    int free = 0;
    for (int u = v; u < n; ++u) free += used[static_cast<std::size_t>(u)] ? 0 : 1;
    if (count + free / 3 <= best) return;
    if (v >= n) {
      best = std::max(best, count);
      return;
    }
    used[static_cast<std::size_t>(v)] = 1;
    for (int a = v + 1; a < n; ++a) {
      if (used[static_cast<std::size_t>(a)] || !g.has_edge(v, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (used[static_cast<std::size_t>(b)] || !g.has_edge(v, b) || !g.has_edge(a, b)) continue;
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
        rec(v + 1, count + 1);
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 0;
      }
    }
    rec(v + 1, count);
    used[static_cast<std::size_t>(v)] = 0;
  };
  rec(0, 0);
  return best;
}

/// Largest independent set, by subset enumeration (n <= 25).
inline int max_independent_set(const Graph& g) {
  const int n = g.node_count();
  if (n > 25) throw InvalidInput("independent set oracle limited to 25 nodes");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if ((s >> v & 1u) && (adj[static_cast<std::size_t>(v)] & s)) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

/// Most edges induced by k vertices.
inline int densest_k_subgraph(const Graph& g, int k) {
  const int n = g.node_count();
  if (n > 25) throw InvalidInput("densest subgraph oracle limited to 25 nodes");
  k = std::min(k, n);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    int e = 0;
    for (auto [u, v] : g.edges()) e += ((s >> u) & (s >> v) & 1u) ? 1 : 0;
    best = std::max(best, e);
  }
  return best;
}

/// best[k] = most edges induced by k vertices, for every k in 0..n.
inline std::vector<int> densest_profile(const Graph& g) {
  const int n = g.node_count();
  if (n > 25) throw InvalidInput("densest subgraph oracle limited to 25 nodes");
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nb[static_cast<std::size_t>(u)] |= 1u << v;
    nb[static_cast<std::size_t>(v)] |= 1u << u;
  }
  std::vector<int> best(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> inside(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int low = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    inside[s] = inside[rest] + std::popcount(nb[static_cast<std::size_t>(low)] & rest);
    auto& b = best[static_cast<std::size_t>(std::popcount(s))];
    b = std::max(b, inside[s]);
  }
  return best;
}

/// Calls fn on graphs over n labeled nodes whose degrees are non-increasing in
/// node order. Every graph on n nodes is isomorphic to at least one of them.
inline void for_each_degree_sorted_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 10) throw InvalidInput("degree-sorted enumeration limited to 10 nodes");
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) e.emplace_back(u, v);
      fn(Graph(n, e));
      return;
    }
    auto ui = static_cast<std::size_t>(i);
    int fixed = 0;
    for (int j = 0; j < i; ++j) fixed += adj[ui][static_cast<std::size_t>(j)];
    const int rest = n - 1 - i;
    for (std::uint32_t m = 0; m < (1u << rest); ++m) {
      int d = fixed + std::popcount(m);
      if (i > 0 && d > deg[ui - 1]) continue;
      for (int b = 0; b < rest; ++b) {
        auto j = static_cast<std::size_t>(i + 1 + b);
        adj[ui][j] = adj[j][ui] = static_cast<char>(m >> b & 1u);
      }
      deg[ui] = d;
      rec(i + 1);
    }
    for (int b = 0; b < rest; ++b) {
      auto j = static_cast<std::size_t>(i + 1 + b);
      adj[ui][j] = adj[j][ui] = 0;
    }
  };
  rec(0);
}

/// Most elements covered by k sets (all elements counted once).
inline int max_coverage(const WeightedSetSystem& sys, int k) {
  const int m = static_cast<int>(sys.set_count());
  if (m > 25) throw InvalidInput("coverage oracle limited to 25 sets");
  k = std::min(k, m);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) != k) continue;
    std::set<int> covered;
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1u) covered.insert(sys.set(static_cast<std::size_t>(i)).begin(), sys.set(static_cast<std::size_t>(i)).end());
    }
    best = std::max(best, static_cast<int>(covered.size()));
  }
  return best;
}

/// Most elements covered at least twice by at most k sets.
inline int max_two_coverage(const WeightedSetSystem& sys, int k) {
  const int m = static_cast<int>(sys.set_count());
  if (m > 25) throw InvalidInput("2-coverage oracle limited to 25 sets");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) > k) continue;
    std::vector<int> count(static_cast<std::size_t>(sys.universe_size()), 0);
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1u) {
        for (int e : sys.set(static_cast<std::size_t>(i))) ++count[static_cast<std::size_t>(e)];
      }
    }
    best = std::max(best, static_cast<int>(std::count_if(count.begin(), count.end(), [](int c) { return c >= 2; })));
  }
  return best;
}

/// Most edges crossing a bipartition.
inline int max_cut(const Graph& g) {
  const int n = g.node_count();
  if (n > 25) throw InvalidInput("max cut oracle limited to 25 nodes");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int c = 0;
    for (auto [u, v] : g.edges()) c += ((s >> u) ^ (s >> v)) & 1u ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

/// Best profit: covered element weight minus selected set costs.
inline Rational max_profit_coverage(const WeightedSetSystem& sys) {
  const int m = static_cast<int>(sys.set_count());
  if (m > 24) throw InvalidInput("profit oracle limited to 24 sets");
  Rational best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::vector<char> covered(static_cast<std::size_t>(sys.universe_size()), 0);
    Rational p = 0;
    for (int i = 0; i < m; ++i) {
      if (!(s >> i & 1u)) continue;
      p -= sys.cost(static_cast<std::size_t>(i));
      for (int e : sys.set(static_cast<std::size_t>(i))) {
        if (!covered[static_cast<std::size_t>(e)]) {
          covered[static_cast<std::size_t>(e)] = 1;
          p += sys.weight(e);
        }
      }
    }
    if (p > best) best = p;
  }
  return best;
}

/// Chromatic number by trying k = 1, 2, ... with backtracking.
inline int chromatic_number(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(int)> rec = [&](int v) {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
          if (u < v && color[static_cast<std::size_t>(u)] == c) ok = false;
        }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (rec(v + 1)) return true;
      }
      color[static_cast<std::size_t>(v)] = -1;
      return false;
    };
    if (rec(0)) return k;
  }
  return n;
}

/// Fewest violated equations over all assignments.
inline int min_violated(const Lin2System& sys) {
  const int n = sys.variable_count();
  if (n > 22) throw InvalidInput("3-LIN-2 oracle limited to 22 variables");
  int best = static_cast<int>(sys.equations().size());
  std::vector<int> a(static_cast<std::size_t>(n));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = static_cast<int>(s >> i & 1u);
    best = std::min(best, sys.violated_count(a));
  }
  return best;
}

}  // namespace packcover::oracle
