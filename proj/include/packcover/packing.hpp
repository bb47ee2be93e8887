#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "packcover/core/types.hpp"

namespace packcover {

/// One 3-element set per triangle, in lexicographic order of (u < v < w).
inline SetCollection enumerate_triangles(const Graph& g) {
  SetCollection c;
  c.universe_size = g.node_count();
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) c.sets.push_back({u, v, w});
      }
    }
  }
  return c;
}

namespace detail {

/// Incremental view of a packing: which selected set owns each element.
class PackingState {
 public:
  PackingState(const SetCollection& c) : c_(c), owner_(static_cast<std::size_t>(c.universe_size), -1),
                                          in_solution_(c.size(), false) {}

  bool fits(std::size_t s) const {
    for (int e : c_.sets[s]) {
      if (owner_[static_cast<std::size_t>(e)] >= 0) return false;
    }
    return true;
  }
  void add(std::size_t s) {
    for (int e : c_.sets[s]) owner_[static_cast<std::size_t>(e)] = static_cast<long>(s);
    in_solution_[s] = true;
  }
  void remove(std::size_t s) {
    for (int e : c_.sets[s]) owner_[static_cast<std::size_t>(e)] = -1;
    in_solution_[s] = false;
  }
  long owner(int e) const { return owner_[static_cast<std::size_t>(e)]; }
  bool selected(std::size_t s) const { return in_solution_[s]; }
  std::vector<std::size_t> selection() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < c_.size(); ++s) {
      if (in_solution_[s]) out.push_back(s);
    }
    return out;
  }
  /// Selected sets overlapping set s, sorted.
  std::vector<std::size_t> conflicts(std::size_t s) const {
    std::vector<std::size_t> out;
    for (int e : c_.sets[s]) {
      long o = owner_[static_cast<std::size_t>(e)];
      if (o >= 0) out.push_back(static_cast<std::size_t>(o));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  const SetCollection& c_;
  std::vector<long> owner_;
  std::vector<bool> in_solution_;
};

inline std::vector<std::size_t> greedy_order(const SetCollection& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.weight(a) > c.weight(b); });
  return order;
}

inline void greedy_fill(const SetCollection& c, PackingState& st) {
  for (std::size_t s : greedy_order(c)) {
    if (!st.selected(s) && st.fits(s)) st.add(s);
  }
}

inline PackingSolution make_solution(const SetCollection& c, std::vector<std::size_t> selected) {
  std::sort(selected.begin(), selected.end());
  PackingSolution sol;
  for (std::size_t s : selected) {
    sol.objective += c.weight(s);
    sol.members.push_back(c.sets[s]);
  }
  sol.selected = std::move(selected);
  return sol;
}

inline bool disjoint_from(const std::vector<int>& s, const std::vector<char>& used) {
  for (int e : s) {
    if (used[static_cast<std::size_t>(e)]) return false;
  }
  return true;
}

}  // namespace detail

/// Heaviest-first (ties by index) maximal packing.
inline PackingSolution greedy_packing(const SetCollection& c) {
  detail::PackingState st(c);
  detail::greedy_fill(c, st);
  return detail::make_solution(c, st.selection());
}

/// Local search with s-improvements: remove r <= s selected sets and insert
/// r+1 pairwise-disjoint sets. Weights are ignored.
inline PackingSolution local_search_packing(const SetCollection& c, int s = 2, std::size_t* moves_out = nullptr) {
  if (s < 1) throw InvalidInput("improvement size s must be at least 1");
  detail::PackingState st(c);
  detail::greedy_fill(c, st);
  std::size_t moves = 0;

  // Unselected candidates touching a given element.
  std::vector<std::vector<std::size_t>> by_element(static_cast<std::size_t>(c.universe_size));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int e : c.sets[i]) by_element[static_cast<std::size_t>(e)].push_back(i);
  }

  auto try_removal = [&](const std::vector<std::size_t>& removed) -> bool {
    // Sets that fit once `removed` is gone and overlap at least one of them.
    std::vector<char> freed(static_cast<std::size_t>(c.universe_size), 0);
    for (std::size_t r : removed) {
      for (int e : c.sets[r]) freed[static_cast<std::size_t>(e)] = 1;
    }
    std::vector<std::size_t> cand;
    for (std::size_t r : removed) {
      for (int e : c.sets[r]) {
        for (std::size_t t : by_element[static_cast<std::size_t>(e)]) {
          if (st.selected(t)) continue;
          bool ok = true;
          for (int x : c.sets[t]) {
            if (st.owner(x) >= 0 && !freed[static_cast<std::size_t>(x)]) {
              ok = false;
              break;
            }
          }
          if (ok) cand.push_back(t);
        }
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t need = removed.size() + 1;
    if (cand.size() < need) return false;
    std::vector<char> used(static_cast<std::size_t>(c.universe_size), 0);
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
      if (chosen.size() == need) return true;
      for (std::size_t i = start; i + (need - chosen.size()) <= cand.size(); ++i) {
        const auto& set = c.sets[cand[i]];
        if (!detail::disjoint_from(set, used)) continue;
        for (int e : set) used[static_cast<std::size_t>(e)] = 1;
        chosen.push_back(cand[i]);
        if (dfs(i + 1)) return true;
        chosen.pop_back();
        for (int e : set) used[static_cast<std::size_t>(e)] = 0;
      }
      return false;
    };
    if (!dfs(0)) return false;
    for (std::size_t r : removed) st.remove(r);
    for (std::size_t t : chosen) st.add(t);
    detail::greedy_fill(c, st);
    return true;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    auto sel = st.selection();
    std::vector<std::size_t> removed;
    std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
      if (!removed.empty() && try_removal(removed)) return true;
      if (static_cast<int>(removed.size()) == s) return false;
      for (std::size_t i = start; i < sel.size(); ++i) {
        removed.push_back(sel[i]);
        if (choose(i + 1)) return true;
        removed.pop_back();
      }
      return false;
    };
    if (choose(0)) {
      improved = true;
      ++moves;
    }
  }
  if (moves_out) *moves_out = moves;
  return detail::make_solution(c, st.selection());
}

/// Rescaled integer weights floor(w * N / w_max) with N = ceil(10 m / eps).
inline std::vector<std::int64_t> squareimp_weights(const SetCollection& c, double eps) {
  std::vector<std::int64_t> out(c.size(), 0);
  Rational wmax = 0;
  for (std::size_t i = 0; i < c.size(); ++i) wmax = std::max(wmax, c.weight(i));
  if (wmax == 0) return out;
  auto big_n = static_cast<std::int64_t>(std::ceil(10.0 * static_cast<double>(c.size()) / eps));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational scaled = c.weight(i) * big_n / wmax;
    out[i] = floor_div(scaled.numerator(), scaled.denominator());
  }
  return out;
}

/// Local search on the sum of squared rescaled weights. A move inserts up to
/// `a` pairwise-disjoint unselected sets T and drops every selected set N(T)
/// they touch; it is accepted when sum w'(T)^2 exceeds sum w'(N(T))^2.
inline PackingSolution squareimp_packing(const SetCollection& c, int a, double eps = 0.1,
                                         std::size_t* moves_out = nullptr) {
  if (a < 1) throw InvalidInput("talon bound a must be at least 1");
  if (!(eps > 0)) throw InvalidInput("eps must be positive");
  auto w = squareimp_weights(c, eps);
  auto sq = [&](std::size_t i) { return static_cast<__int128>(w[i]) * w[i]; };
  detail::PackingState st(c);
  detail::greedy_fill(c, st);
  std::size_t moves = 0;

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (w[i] > 0) order.push_back(i);
  }

  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<char> used(static_cast<std::size_t>(c.universe_size), 0);
    std::vector<std::size_t> talons;
    std::vector<std::size_t> hit;  // multiset of touched selected sets
    std::function<bool(std::size_t, __int128)> dfs = [&](std::size_t start, __int128 gain) -> bool {
      if (!talons.empty()) {
        std::vector<std::size_t> uniq = hit;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        __int128 loss = 0;
        for (std::size_t r : uniq) loss += sq(r);
        if (gain > loss) {
          for (std::size_t r : uniq) st.remove(r);
          for (std::size_t t : talons) st.add(t);
          detail::greedy_fill(c, st);
          return true;
        }
      }
      if (static_cast<int>(talons.size()) == a) return false;
      for (std::size_t k = start; k < order.size(); ++k) {
        std::size_t t = order[k];
        if (st.selected(t) || !detail::disjoint_from(c.sets[t], used)) continue;
        auto conf = st.conflicts(t);
        for (int e : c.sets[t]) used[static_cast<std::size_t>(e)] = 1;
        talons.push_back(t);
        hit.insert(hit.end(), conf.begin(), conf.end());
        if (dfs(k + 1, gain + sq(t))) return true;
        hit.resize(hit.size() - conf.size());
        talons.pop_back();
        for (int e : c.sets[t]) used[static_cast<std::size_t>(e)] = 0;
      }
      return false;
    };
    if (dfs(0, 0)) {
      improved = true;
      ++moves;
    }
  }
  if (moves_out) *moves_out = moves;
  return detail::make_solution(c, st.selection());
}

/// Maximum-weight packing by branch and bound. Branches on the free element
/// with the fewest live sets: cover it with one of them, or leave it empty.
inline PackingSolution exact_packing(const SetCollection& c, const Budget& budget = {}) {
  BudgetTracker tracker(budget, "exact packing");
  std::vector<Rational> wr;
  for (std::size_t i = 0; i < c.size(); ++i) wr.push_back(c.weight(i));
  auto [w, scale] = to_scaled_integers(wr);
  (void)scale;
  const auto n = static_cast<std::size_t>(c.universe_size);
  std::vector<std::vector<std::size_t>> by_element(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.sets[i].empty()) continue;
    for (int e : c.sets[i]) by_element[static_cast<std::size_t>(e)].push_back(i);
  }
  std::vector<char> used(n, 0);
  std::vector<std::size_t> cur, best;
  std::int64_t cur_w = 0, best_w = -1;

  auto live = [&](std::size_t s) { return detail::disjoint_from(c.sets[s], used); };

  std::function<void()> rec = [&]() {
    tracker.tick();
    long double bound = 0;
    std::size_t pick = n;
    std::size_t pick_count = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (used[e]) continue;
      long double ratio = -1;
      std::size_t count = 0;
      for (std::size_t s : by_element[e]) {
        if (!live(s)) continue;
        ++count;
        ratio = std::max(ratio, static_cast<long double>(w[s]) / static_cast<long double>(c.sets[s].size()));
      }
      if (count == 0) continue;
      bound += std::max<long double>(ratio, 0);
      if (pick == n || count < pick_count) {
        pick = e;
        pick_count = count;
      }
    }
    if (cur_w > best_w) {
      best_w = cur_w;
      best = cur;
    }
    if (pick == n) return;
    if (static_cast<long double>(cur_w) + bound * (1 + 1e-12L) + 1e-9L <= static_cast<long double>(best_w)) return;
    std::vector<std::size_t> options;
    for (std::size_t s : by_element[pick]) {
      if (live(s)) options.push_back(s);
    }
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    for (std::size_t s : options) {
      for (int e : c.sets[s]) used[static_cast<std::size_t>(e)] = 1;
      cur.push_back(s);
      cur_w += w[s];
      rec();
      cur_w -= w[s];
      cur.pop_back();
      for (int e : c.sets[s]) used[static_cast<std::size_t>(e)] = 0;
    }
    used[pick] = 1;
    rec();
    used[pick] = 0;
  };
  rec();
  return detail::make_solution(c, best);
}

enum class PackAlgo { greedy, local, squareimp, exact };

struct PackOptions {
  PackAlgo algo = PackAlgo::local;
  int s = 2;
  double eps = 0.1;
  Budget budget{};
};

inline PackingSolution pack_sets(const SetCollection& c, const PackOptions& opt) {
  switch (opt.algo) {
    case PackAlgo::greedy: return greedy_packing(c);
    case PackAlgo::local: return local_search_packing(c, opt.s);
    case PackAlgo::squareimp: return squareimp_packing(c, std::max(1, c.max_set_size()), opt.eps);
    case PackAlgo::exact: return exact_packing(c, opt.budget);
  }
  throw InvalidInput("unknown packing algorithm");
}

inline PackingSolution pack_triangles(const Graph& g, const PackOptions& opt = {}) {
  return pack_sets(enumerate_triangles(g), opt);
}

}  // namespace packcover
