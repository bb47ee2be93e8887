#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "packcover/core/types.hpp"
#include "packcover/packing.hpp"
#include "packcover/sibcheck.hpp"

namespace packcover {

struct SibCoverParams {
  int k = 4;
  int max_group = 3;   // a
  int c = 3;           // threshold of the charging greedy
  double eps = 0.1;
  Budget budget{};
};

/// Local-search improvement size for a given slack: ceil(1/eps), at most 3.
inline int improvement_size_for(double eps) {
  if (!(eps > 0)) throw InvalidInput("eps must be positive");
  return static_cast<int>(std::min(3.0, std::ceil(1.0 / eps)));
}

namespace detail {

inline CoverSolution finish_cover(std::vector<std::vector<int>> groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  CoverSolution sol;
  sol.objective = static_cast<std::int64_t>(groups.size());
  sol.groups = std::move(groups);
  return sol;
}

/// Pairs the remaining individuals in id order; an odd one out becomes a singleton.
inline void pair_leftovers(const std::vector<char>& covered, std::vector<std::vector<int>>& groups) {
  std::vector<int> rest;
  for (std::size_t p = 0; p < covered.size(); ++p) {
    if (!covered[p]) rest.push_back(static_cast<int>(p));
  }
  for (std::size_t i = 0; i < rest.size(); i += 2) {
    if (i + 1 < rest.size()) {
      groups.push_back({rest[i], rest[i + 1]});
    } else {
      groups.push_back({rest[i]});
    }
  }
}

inline std::vector<std::vector<int>> groups_of_size(const std::vector<std::vector<int>>& family, std::size_t size) {
  std::vector<std::vector<int>> out;
  for (const auto& g : family) {
    if (g.size() == size) out.push_back(g);
  }
  return out;
}

/// Local search packing of feasible triples among uncovered individuals.
inline void pack_triples(int n, const std::vector<std::vector<int>>& triples, int s, std::vector<char>& covered,
                         std::vector<std::vector<int>>& groups) {
  SetCollection c;
  c.universe_size = n;
  for (const auto& t : triples) {
    bool free = std::none_of(t.begin(), t.end(), [&](int p) { return covered[static_cast<std::size_t>(p)] != 0; });
    if (free) c.sets.push_back(t);
  }
  auto packing = local_search_packing(c, s);
  for (const auto& m : packing.members) {
    for (int p : m) covered[static_cast<std::size_t>(p)] = 1;
    groups.push_back(m);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Engines over an explicit downward-closed family of feasible groups.

/// Repeatedly takes the largest feasible group made only of uncovered
/// individuals. `family` must be downward closed.
inline CoverSolution cover_largest_first(int n, const std::vector<std::vector<int>>& family) {
  std::vector<const std::vector<int>*> order;
  for (const auto& g : family) {
    if (!g.empty()) order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() > b->size(); });
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> groups;
  int left = n;
  while (left > 0) {
    const std::vector<int>* pick = nullptr;
    for (auto* g : order) {
      if (std::none_of(g->begin(), g->end(), [&](int p) { return covered[static_cast<std::size_t>(p)] != 0; })) {
        pick = g;
        break;
      }
    }
    if (!pick) throw InvalidInput("feasible family does not contain every singleton");
    for (int p : *pick) covered[static_cast<std::size_t>(p)] = 1;
    left -= static_cast<int>(pick->size());
    groups.push_back(*pick);
  }
  return detail::finish_cover(std::move(groups));
}

/// Classic greedy set cover; each chosen group is cut down to its newly
/// covered members so the output is a partition.
inline CoverSolution cover_setcover_greedy(int n, const std::vector<std::vector<int>>& family) {
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> groups;
  int left = n;
  while (left > 0) {
    std::size_t best_gain = 0;
    const std::vector<int>* pick = nullptr;
    for (const auto& g : family) {
      std::size_t gain = 0;
      for (int p : g) gain += covered[static_cast<std::size_t>(p)] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        pick = &g;
      }
    }
    if (!pick) throw InvalidInput("feasible family does not cover every individual");
    std::vector<int> fresh;
    for (int p : *pick) {
      if (!covered[static_cast<std::size_t>(p)]) {
        covered[static_cast<std::size_t>(p)] = 1;
        fresh.push_back(p);
      }
    }
    left -= static_cast<int>(fresh.size());
    groups.push_back(std::move(fresh));
  }
  return detail::finish_cover(std::move(groups));
}

/// Minimum partition into feasible groups. Memoized search over the set of
/// uncovered individuals, always covering the lowest uncovered one next.
inline CoverSolution cover_exact(int n, const std::vector<std::vector<int>>& family, const Budget& budget = {}) {
  if (n > 63) throw BudgetExceeded("exact cover supports at most 63 individuals");
  BudgetTracker tracker(budget, "exact cover");
  using Mask = std::uint64_t;
  std::vector<std::vector<Mask>> by_low(static_cast<std::size_t>(n));
  std::size_t max_size = 1;
  for (const auto& g : family) {
    if (g.empty()) continue;
    Mask m = 0;
    for (int p : g) m |= Mask{1} << p;
    by_low[static_cast<std::size_t>(*std::min_element(g.begin(), g.end()))].push_back(m);
    max_size = std::max(max_size, g.size());
  }
  // Larger groups first finds good incumbents early.
  for (auto& v : by_low) {
    std::stable_sort(v.begin(), v.end(), [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  }
  std::unordered_map<Mask, int> memo;
  std::unordered_map<Mask, Mask> choice;
  std::function<int(Mask)> solve = [&](Mask left) -> int {
    if (left == 0) return 0;
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    tracker.tick();
    int low = std::countr_zero(left);
    int best = 1 << 29;
    Mask best_g = 0;
    int lower = (std::popcount(left) + static_cast<int>(max_size) - 1) / static_cast<int>(max_size);
    for (Mask g : by_low[static_cast<std::size_t>(low)]) {
      if ((g & ~left) != 0) continue;
      int rest = solve(left & ~g);
      if (1 + rest < best) {
        best = 1 + rest;
        best_g = g;
        if (best == lower) break;
      }
    }
    if (best_g == 0) {
      // Family without singletons: fall back to one.
      best_g = Mask{1} << low;
      best = 1 + solve(left & ~best_g);
    }
    memo.emplace(left, best);
    choice.emplace(left, best_g);
    return best;
  };
  Mask all = n == 0 ? 0 : (n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  solve(all);
  std::vector<std::vector<int>> groups;
  for (Mask left = all; left != 0;) {
    Mask g = choice.at(left);
    std::vector<int> members;
    for (int p = 0; p < n; ++p) {
      if (g >> p & 1) members.push_back(p);
    }
    groups.push_back(std::move(members));
    left &= ~g;
  }
  return detail::finish_cover(std::move(groups));
}

/// Triples by local search, the rest in pairs.
inline CoverSolution cover_triples_then_pairs(int n, const std::vector<std::vector<int>>& family, double eps) {
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> groups;
  detail::pack_triples(n, detail::groups_of_size(family, 3), improvement_size_for(eps), covered, groups);
  detail::pair_leftovers(covered, groups);
  return detail::finish_cover(std::move(groups));
}

/// Maximal packing of 4-groups (enumeration order), then triples, then pairs.
inline CoverSolution cover_quads_triples_pairs(int n, const std::vector<std::vector<int>>& family, double eps) {
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> groups;
  for (const auto& q : detail::groups_of_size(family, 4)) {
    if (std::none_of(q.begin(), q.end(), [&](int p) { return covered[static_cast<std::size_t>(p)] != 0; })) {
      for (int p : q) covered[static_cast<std::size_t>(p)] = 1;
      groups.push_back(q);
    }
  }
  detail::pack_triples(n, detail::groups_of_size(family, 3), improvement_size_for(eps), covered, groups);
  detail::pair_leftovers(covered, groups);
  return detail::finish_cover(std::move(groups));
}

// ---------------------------------------------------------------------------
// Sibling-instance front ends.

/// Largest-first greedy over feasible groups of size <= c.
inline CoverSolution solve_threshold_greedy(const SibInstance& inst, int k, int c) {
  if (c < 1) throw InvalidInput("threshold c must be at least 1");
  return cover_largest_first(inst.size(), enumerate_groups(inst, k, c));
}

inline CoverSolution solve_a3(const SibInstance& inst, int k, double eps = 0.1) {
  return cover_triples_then_pairs(inst.size(), enumerate_groups(inst, k, 3), eps);
}

inline CoverSolution solve_a4(const SibInstance& inst, int k, double eps = 0.1) {
  return cover_quads_triples_pairs(inst.size(), enumerate_groups(inst, k, 4), eps);
}

inline CoverSolution solve_setcover_greedy(const SibInstance& inst, int k, int a) {
  return cover_setcover_greedy(inst.size(), enumerate_groups(inst, k, a));
}

inline CoverSolution solve_exact_cover(const SibInstance& inst, int k, int a, const Budget& budget = {}) {
  return cover_exact(inst.size(), enumerate_groups(inst, k, std::max(1, std::min(a, inst.size()))), budget);
}

/// Charging bound a/c - 1 + H(c) of the threshold greedy.
inline Rational threshold_greedy_bound(int a, int c) {
  Rational h = 0;
  for (int i = 1; i <= c; ++i) h += Rational(1, i);
  return Rational(a, c) - 1 + h;
}

}  // namespace packcover
