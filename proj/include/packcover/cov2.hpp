#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/types.hpp"

namespace packcover {

/// T_ij = S_i ∩ S_j with its parent pair (i < j).
struct PairwiseSet {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<int> elements;
};

/// Elements occurring in at least two selected sets; objective is their count.
inline Cov2Solution make_cov2_solution(const WeightedSetSystem& sys, std::vector<std::size_t> selected) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  std::vector<int> count(static_cast<std::size_t>(sys.universe_size()), 0);
  for (std::size_t s : selected) {
    if (s >= sys.set_count()) throw InvalidInput("set index " + std::to_string(s + 1) + " out of range");
    for (int e : sys.set(s)) ++count[static_cast<std::size_t>(e)];
  }
  Cov2Solution sol;
  for (int e = 0; e < sys.universe_size(); ++e) {
    if (count[static_cast<std::size_t>(e)] >= 2) sol.twice_covered.push_back(e);
  }
  sol.objective = static_cast<std::int64_t>(sol.twice_covered.size());
  sol.selected = std::move(selected);
  return sol;
}

/// Greedy maximum coverage over `candidates` (indices into `sets`), counting
/// only elements with counted[e] set. Picks min(k, |candidates|) sets; ties go
/// to the smallest index.
inline std::vector<std::size_t> maxcov_greedy_over(const std::vector<std::vector<int>>& sets,
                                                   const std::vector<std::size_t>& candidates, int universe_size,
                                                   const std::vector<char>& counted, int k) {
  std::vector<char> covered(static_cast<std::size_t>(universe_size), 0);
  std::vector<char> taken(sets.size(), 0);
  std::vector<std::size_t> chosen;
  auto limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), candidates.size());
  while (chosen.size() < limit) {
    std::size_t best = sets.size();
    long best_gain = -1;
    for (std::size_t c : candidates) {
      if (taken[c]) continue;
      long gain = 0;
      for (int e : sets[c]) {
        auto ue = static_cast<std::size_t>(e);
        if (counted[ue] && !covered[ue]) ++gain;
      }
      if (gain > best_gain || (gain == best_gain && c < best)) {
        best_gain = gain;
        best = c;
      }
    }
    taken[best] = 1;
    chosen.push_back(best);
    for (int e : sets[best]) covered[static_cast<std::size_t>(e)] = 1;
  }
  return chosen;
}

/// Unweighted greedy maximum coverage with k sets.
inline std::vector<std::size_t> maxcov_greedy(const WeightedSetSystem& sys, int k) {
  std::vector<std::size_t> all(sys.set_count());
  std::iota(all.begin(), all.end(), 0);
  std::vector<char> counted(static_cast<std::size_t>(sys.universe_size()), 1);
  return maxcov_greedy_over(sys.sets(), all, sys.universe_size(), counted, k);
}

inline std::size_t coverage(const WeightedSetSystem& sys, const std::vector<std::size_t>& selection) {
  std::vector<char> covered(static_cast<std::size_t>(sys.universe_size()), 0);
  std::size_t n = 0;
  for (std::size_t s : selection) {
    for (int e : sys.set(s)) {
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = 1;
        ++n;
      }
    }
  }
  return n;
}

/// Nonempty pairwise intersections, deduplicated by element set; the first
/// parent pair in (i, j) order is kept.
inline std::vector<PairwiseSet> pairwise_sets(const WeightedSetSystem& sys) {
  std::vector<PairwiseSet> out;
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t i = 0; i < sys.set_count(); ++i) {
    for (std::size_t j = i + 1; j < sys.set_count(); ++j) {
      std::vector<int> t;
      std::set_intersection(sys.set(i).begin(), sys.set(i).end(), sys.set(j).begin(), sys.set(j).end(),
                            std::back_inserter(t));
      if (t.empty() || seen.count(t)) continue;
      seen.emplace(t, out.size());
      out.push_back({i, j, std::move(t)});
    }
  }
  return out;
}

/// floor(k/2) intersections by greedy coverage, reported as their parents.
inline Cov2Solution cov2_pairwise(const WeightedSetSystem& sys, int k) {
  if (k < 2) throw InvalidInput("2-coverage needs k >= 2");
  auto pw = pairwise_sets(sys);
  std::vector<std::vector<int>> sets;
  for (const auto& p : pw) sets.push_back(p.elements);
  std::vector<std::size_t> all(sets.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<char> counted(static_cast<std::size_t>(sys.universe_size()), 1);
  std::vector<std::size_t> selected;
  for (std::size_t t : maxcov_greedy_over(sets, all, sys.universe_size(), counted, k / 2)) {
    selected.push_back(pw[t].first);
    selected.push_back(pw[t].second);
  }
  return make_cov2_solution(sys, std::move(selected));
}

/// ceil(k/2) greedy sets, then floor(k/2) more chosen greedily for the
/// elements the first batch covers exactly once.
inline Cov2Solution cov2_two_phase(const WeightedSetSystem& sys, int k) {
  if (k < 2) throw InvalidInput("2-coverage needs k >= 2");
  auto first = maxcov_greedy(sys, (k + 1) / 2);
  std::vector<int> count(static_cast<std::size_t>(sys.universe_size()), 0);
  std::vector<char> in_first(sys.set_count(), 0);
  for (std::size_t s : first) {
    in_first[s] = 1;
    for (int e : sys.set(s)) ++count[static_cast<std::size_t>(e)];
  }
  std::vector<char> once(static_cast<std::size_t>(sys.universe_size()), 0);
  for (std::size_t e = 0; e < once.size(); ++e) once[e] = count[e] == 1 ? 1 : 0;
  std::vector<std::size_t> residual;
  for (std::size_t s = 0; s < sys.set_count(); ++s) {
    if (!in_first[s]) residual.push_back(s);
  }
  auto second = maxcov_greedy_over(sys.sets(), residual, sys.universe_size(), once, k / 2);
  first.insert(first.end(), second.begin(), second.end());
  return make_cov2_solution(sys, std::move(first));
}

/// Better of the two routes; ties go to the pairwise route.
inline Cov2Solution cov2_combined(const WeightedSetSystem& sys, int k) {
  auto a = cov2_pairwise(sys, k);
  auto b = cov2_two_phase(sys, k);
  return b.objective > a.objective ? b : a;
}

/// All selections of min(k, m) sets.
inline Cov2Solution cov2_exact(const WeightedSetSystem& sys, int k, const Budget& budget = {}) {
  if (k < 0) throw InvalidInput("k must be nonnegative");
  const int m = static_cast<int>(sys.set_count());
  const int r = std::min(k, m);
  if (binomial(m, r) > static_cast<double>(budget.max_nodes)) {
    throw BudgetExceeded("exact 2-coverage over C(" + std::to_string(m) + "," + std::to_string(r) +
                         ") selections exceeds the node budget");
  }
  BudgetTracker tracker(budget, "exact 2-coverage");
  std::vector<int> count(static_cast<std::size_t>(sys.universe_size()), 0);
  std::vector<std::size_t> cur, best;
  long twice = 0, best_val = -1;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      tracker.tick();
      if (twice > best_val) {
        best_val = twice;
        best = cur;
      }
      return;
    }
    for (int s = start; s <= m - (r - static_cast<int>(cur.size())); ++s) {
      for (int e : sys.set(static_cast<std::size_t>(s))) {
        if (++count[static_cast<std::size_t>(e)] == 2) ++twice;
      }
      cur.push_back(static_cast<std::size_t>(s));
      rec(s + 1);
      cur.pop_back();
      for (int e : sys.set(static_cast<std::size_t>(s))) {
        if (count[static_cast<std::size_t>(e)]-- == 2) --twice;
      }
    }
  };
  rec(0);
  return make_cov2_solution(sys, std::move(best));
}

/// Universe = edges, one set per vertex holding its incident edges (f = 2).
inline WeightedSetSystem ds_to_cov2(const Graph& g) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.node_count()));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    sets[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
    sets[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
  return WeightedSetSystem(static_cast<int>(g.edge_count()), std::move(sets));
}

/// One node per set, an edge of weight |S_i ∩ S_j| for every overlapping pair.
inline Graph cov2_to_weighted_ds(const WeightedSetSystem& sys) {
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < sys.set_count(); ++i) {
    for (std::size_t j = i + 1; j < sys.set_count(); ++j) {
      std::vector<int> t;
      std::set_intersection(sys.set(i).begin(), sys.set(i).end(), sys.set(j).begin(), sys.set(j).end(),
                            std::back_inserter(t));
      if (t.empty()) continue;
      edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      weights.emplace_back(static_cast<std::int64_t>(t.size()));
    }
  }
  return Graph(static_cast<int>(sys.set_count()), edges, weights);
}

}  // namespace packcover
