#pragma once

#include <algorithm>
#include <bit>
#include <iterator>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

#include "packcover/core/types.hpp"
#include "packcover/packing.hpp"

namespace packcover {

/// w(union of selected sets) - sum of their costs. Duplicate indices count once.
inline Rational mpc_profit(const WeightedSetSystem& inst, const std::vector<std::size_t>& selection) {
  std::vector<std::size_t> sel = selection;
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  std::vector<char> covered(static_cast<std::size_t>(inst.universe_size()), 0);
  Rational profit = 0;
  for (std::size_t s : sel) {
    if (s >= inst.set_count()) throw InvalidInput("set index " + std::to_string(s + 1) + " out of range");
    profit -= inst.cost(s);
    for (int e : inst.set(s)) {
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = 1;
        profit += inst.weight(e);
      }
    }
  }
  return profit;
}

namespace detail {

inline MpcSolution mpc_finish(const WeightedSetSystem& inst, std::vector<std::size_t> selected) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  MpcSolution sol;
  sol.objective = mpc_profit(inst, selected);
  sol.selected = std::move(selected);
  return sol;
}

/// Element weights and set costs on one integer scale.
struct ScaledSystem {
  std::vector<std::int64_t> weight;
  std::vector<std::int64_t> cost;
  std::int64_t scale = 1;
};

inline ScaledSystem scale_system(const WeightedSetSystem& inst) {
  std::vector<Rational> all(inst.weights());
  all.insert(all.end(), inst.costs().begin(), inst.costs().end());
  auto [ints, scale] = to_scaled_integers(all);
  ScaledSystem s;
  s.scale = scale;
  s.weight.assign(ints.begin(), ints.begin() + inst.universe_size());
  s.cost.assign(ints.begin() + inst.universe_size(), ints.end());
  return s;
}

}  // namespace detail

/// Subset expansion: every nonempty subset P of every set S with
/// w(P) - q(S) >= 0 becomes a weighted set; `parent` maps back to S.
struct SubsetExpansion {
  SetCollection collection;
  std::vector<std::size_t> parent;
};

inline SubsetExpansion expand_subsets(const WeightedSetSystem& inst, double max_subsets = 5e6) {
  double total = 0;
  for (const auto& s : inst.sets()) total += std::ldexp(1.0, static_cast<int>(s.size()));
  if (total > max_subsets) throw BudgetExceeded("subset expansion would create too many sets");
  SubsetExpansion ex;
  ex.collection.universe_size = inst.universe_size();
  for (std::size_t i = 0; i < inst.set_count(); ++i) {
    const auto& s = inst.set(i);
    const std::uint64_t full = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      std::vector<int> sub;
      Rational w = -inst.cost(i);
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (mask >> b & 1) {
          sub.push_back(s[b]);
          w += inst.weight(s[b]);
        }
      }
      if (w < 0) continue;
      ex.collection.sets.push_back(std::move(sub));
      ex.collection.weights.push_back(w);
      ex.parent.push_back(i);
    }
  }
  return ex;
}

/// Optimal for sets of size <= 2: maximum-weight matching on the element
/// graph, with one private partner node per element for singleton subsets.
inline MpcSolution mpc_exact_small_a(const WeightedSetSystem& inst) {
  if (inst.max_set_size() > 2) throw InvalidInput("matching solver needs every set to have at most 2 elements");
  auto sc = detail::scale_system(inst);
  const int n = inst.universe_size();
  // Best candidate per node pair: (value, parent).
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::size_t>> best;
  auto offer = [&](int u, int v, std::int64_t value, std::size_t parent) {
    if (value <= 0) return;
    auto key = std::minmax(u, v);
    auto it = best.find(key);
    if (it == best.end() || value > it->second.first) best[key] = {value, parent};
  };
  for (std::size_t i = 0; i < inst.set_count(); ++i) {
    const auto& s = inst.set(i);
    for (int e : s) offer(e, n + e, sc.weight[static_cast<std::size_t>(e)] - sc.cost[i], i);
    if (s.size() == 2) {
      offer(s[0], s[1],
            sc.weight[static_cast<std::size_t>(s[0])] + sc.weight[static_cast<std::size_t>(s[1])] - sc.cost[i], i);
    }
  }
  using EdgeWeight = boost::property<boost::edge_weight_t, std::int64_t>;
  using MatchGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, EdgeWeight>;
  MatchGraph g(static_cast<std::size_t>(2 * n));
  for (const auto& [key, val] : best) boost::add_edge(key.first, key.second, EdgeWeight(val.first), g);
  std::vector<boost::graph_traits<MatchGraph>::vertex_descriptor> mate(static_cast<std::size_t>(2 * n));
  if (n > 0) boost::maximum_weighted_matching(g, &mate[0]);
  std::vector<std::size_t> chosen;
  const auto none = boost::graph_traits<MatchGraph>::null_vertex();
  for (int u = 0; u < 2 * n; ++u) {
    auto v = mate[static_cast<std::size_t>(u)];
    if (v == none || static_cast<int>(v) < u) continue;
    chosen.push_back(best.at({u, static_cast<int>(v)}).second);
  }
  return detail::mpc_finish(inst, std::move(chosen));
}

/// Subset expansion followed by squared-weight local search; chosen subsets
/// are reported by their parent sets.
inline MpcSolution mpc_via_setpacking(const WeightedSetSystem& inst, int a, double eps = 0.1) {
  if (a < 1) throw InvalidInput("a must be at least 1");
  if (inst.max_set_size() > a) throw InvalidInput("instance has a set larger than a = " + std::to_string(a));
  auto ex = expand_subsets(inst);
  auto packing = squareimp_packing(ex.collection, a, eps);
  std::vector<std::size_t> chosen;
  for (std::size_t s : packing.selected) chosen.push_back(ex.parent[s]);
  return detail::mpc_finish(inst, std::move(chosen));
}

/// Repeatedly inserts the set of largest positive profit w(S) - q(S) that is
/// disjoint from the selection; ties go to the lower index.
inline MpcSolution mpc_greedy(const WeightedSetSystem& inst) {
  std::vector<char> used(static_cast<std::size_t>(inst.universe_size()), 0);
  std::vector<char> taken(inst.set_count(), 0);
  std::vector<std::size_t> chosen;
  for (;;) {
    std::optional<std::size_t> pick;
    Rational best = 0;
    for (std::size_t i = 0; i < inst.set_count(); ++i) {
      if (taken[i] || !detail::disjoint_from(inst.set(i), used)) continue;
      Rational p = inst.set_weight(i) - inst.cost(i);
      if (p > best) {
        best = p;
        pick = i;
      }
    }
    if (!pick) break;
    taken[*pick] = 1;
    for (int e : inst.set(*pick)) used[static_cast<std::size_t>(e)] = 1;
    chosen.push_back(*pick);
  }
  return detail::mpc_finish(inst, std::move(chosen));
}

/// Brute force over all 2^m selections in Gray-code order.
inline MpcSolution mpc_exact(const WeightedSetSystem& inst, const Budget& budget = {}) {
  const std::size_t m = inst.set_count();
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_nodes) {
    throw BudgetExceeded("exact profit coverage over " + std::to_string(m) + " sets exceeds the node budget");
  }
  auto sc = detail::scale_system(inst);
  std::vector<int> count(static_cast<std::size_t>(inst.universe_size()), 0);
  std::int64_t cur = 0, best = 0;
  std::uint64_t best_mask = 0, mask = 0;
  BudgetTracker tracker(budget, "exact profit coverage");
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    tracker.tick();
    auto bit = static_cast<std::size_t>(std::countr_zero(step));
    mask ^= std::uint64_t{1} << bit;
    bool on = mask >> bit & 1;
    if (on) {
      cur -= sc.cost[bit];
      for (int e : inst.set(bit)) {
        if (count[static_cast<std::size_t>(e)]++ == 0) cur += sc.weight[static_cast<std::size_t>(e)];
      }
    } else {
      cur += sc.cost[bit];
      for (int e : inst.set(bit)) {
        if (--count[static_cast<std::size_t>(e)] == 0) cur -= sc.weight[static_cast<std::size_t>(e)];
      }
    }
    if (cur > best) {
      best = cur;
      best_mask = mask;
    }
  }
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    if (best_mask >> i & 1) chosen.push_back(i);
  }
  return detail::mpc_finish(inst, std::move(chosen));
}

// ---------------------------------------------------------------------------
// 2-IMP with named sets.

struct TwoImpParams {
  double alpha = 2.0;
  double delta = 1.0;
  double eps = 0.1;
  std::size_t max_moves = 100000;
};

/// A selected name with the elements it currently claims.
struct NamedSet {
  std::size_t name = 0;
  std::vector<int> body;
  Rational profit = 0;
};

/// What happened to one overlapping set A during an accepted move.
struct OverlapDecision {
  std::size_t name = 0;
  std::vector<int> body_before;
  bool removed = false;
};

struct TwoImpMove {
  std::vector<std::size_t> inserted;
  std::vector<std::vector<int>> inserted_bodies;
  std::vector<OverlapDecision> overlaps;
  double potential_gain = 0;
};

struct TwoImpResult {
  MpcSolution solution;
  std::vector<NamedSet> named;
  std::vector<TwoImpMove> trace;
  std::size_t moves = 0;
};

/// Largest over split allocations t in [0, w] of (x_a + t)^alpha + (x_b + w - t)^alpha
/// minus the better of the two whole allocations. Never positive for alpha >= 1.
inline double split_advantage(double x_a, double x_b, double w, double alpha, int samples = 64) {
  auto value = [&](double t) { return std::pow(x_a + t, alpha) + std::pow(x_b + w - t, alpha); };
  double whole = std::max(value(0.0), value(w));
  double best_split = -INFINITY;
  for (int i = 1; i < samples; ++i) best_split = std::max(best_split, value(w * i / samples));
  return best_split - whole;
}

/// x^alpha - (x - w)^alpha: the gain of handing an overlap of size w to a set of
/// profit x. Nondecreasing in x, so the keep/remove decision crosses at most once.
inline double overlap_gain(double x, double w, double alpha) {
  return std::pow(x, alpha) - std::pow(std::max(0.0, x - w), alpha);
}

namespace detail {

class TwoImp {
 public:
  TwoImp(const WeightedSetSystem& inst, const TwoImpParams& p) : inst_(inst), p_(p), sc_(scale_system(inst)) {
    if (!(p.alpha > 1)) throw InvalidInput("alpha must exceed 1");
    if (!(p.delta > 0)) throw InvalidInput("delta must be positive");
    if (!(p.eps > 0)) throw InvalidInput("eps must be positive");
    owner_.assign(static_cast<std::size_t>(inst.universe_size()), -1);
    std::int64_t wmax = 0;
    for (std::size_t i = 0; i < inst.set_count(); ++i) wmax = std::max(wmax, full_profit(i));
    auto m = static_cast<double>(std::max<std::size_t>(1, inst.set_count()));
    step_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(p.eps * static_cast<double>(wmax) / m)));
  }

  std::int64_t full_profit(std::size_t s) const {
    std::int64_t w = -sc_.cost[s];
    for (int e : inst_.set(s)) w += sc_.weight[static_cast<std::size_t>(e)];
    return w;
  }
  std::int64_t quant(std::int64_t profit) const { return profit <= 0 ? 0 : profit / step_; }
  double pw(double x) const { return x <= 0 ? 0.0 : std::pow(x, p_.alpha); }

  void seed(const std::vector<std::size_t>& names) {
    for (std::size_t s : names) insert(s, inst_.set(s));
  }

  TwoImpResult run() {
    TwoImpResult res;
    build_candidates();
    while (res.moves < p_.max_moves) {
      bool moved = false;
      for (const auto& cand : candidates_) {
        auto move = evaluate(cand);
        if (move) {
          res.trace.push_back(apply(*move));
          ++res.moves;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    std::vector<std::size_t> names;
    for (const auto& [name, body] : bodies_) {
      names.push_back(name);
      NamedSet ns{name, body, Rational(body_profit(name, body), sc_.scale)};
      res.named.push_back(std::move(ns));
    }
    res.solution = mpc_finish(inst_, names);
    return res;
  }

 private:
  struct Plan {
    std::vector<std::size_t> inserted;
    std::vector<std::vector<int>> bodies;
    std::vector<std::size_t> removed;
    std::vector<std::size_t> kept_overlaps;
    double gain = 0;
  };

  std::int64_t body_profit(std::size_t name, const std::vector<int>& body) const {
    std::int64_t w = -sc_.cost[name];
    for (int e : body) w += sc_.weight[static_cast<std::size_t>(e)];
    return w;
  }

  void insert(std::size_t name, std::vector<int> body) {
    for (int e : body) owner_[static_cast<std::size_t>(e)] = static_cast<long>(name);
    bodies_[name] = std::move(body);
  }
  void erase(std::size_t name) {
    for (int e : bodies_.at(name)) owner_[static_cast<std::size_t>(e)] = -1;
    bodies_.erase(name);
  }

  void build_candidates() {
    std::vector<std::size_t> useful;
    for (std::size_t i = 0; i < inst_.set_count(); ++i) {
      if (quant(full_profit(i)) >= 1) useful.push_back(i);
    }
    for (std::size_t i = 0; i < useful.size(); ++i) {
      candidates_.push_back({useful[i]});
      for (std::size_t j = i + 1; j < useful.size(); ++j) candidates_.push_back({useful[i], useful[j]});
    }
    auto ub = [&](const std::vector<std::size_t>& c) {
      std::int64_t s = 0;
      for (auto x : c) s += full_profit(x);
      return s;
    };
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [&](const auto& a, const auto& b) { return ub(a) > ub(b); });
  }

  /// Best consistent assumption for inserting the candidate names.
  std::optional<Plan> evaluate(const std::vector<std::size_t>& cand) {
    // Names already selected are released before reinsertion.
    std::vector<std::size_t> released;
    for (auto x : cand) {
      if (bodies_.count(x)) released.push_back(x);
    }
    auto owner_of = [&](int e) -> long {
      long o = owner_[static_cast<std::size_t>(e)];
      if (o >= 0 && std::find(released.begin(), released.end(), static_cast<std::size_t>(o)) != released.end()) return -1;
      return o;
    };
    double released_pot = 0;
    for (auto x : released) released_pot += pw(static_cast<double>(quant(body_profit(x, bodies_.at(x)))));

    std::optional<Plan> best;
    const int splits = cand.size() == 2 ? 2 : 1;
    for (int who = 0; who < splits; ++who) {
      // Tentative bodies: names minus the B∩C part given to the other.
      std::vector<std::vector<int>> tent(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) tent[i] = inst_.set(cand[i]);
      if (cand.size() == 2) {
        const auto& keep = tent[static_cast<std::size_t>(who)];
        auto& lose = tent[static_cast<std::size_t>(1 - who)];
        std::vector<int> out;
        std::set_difference(lose.begin(), lose.end(), keep.begin(), keep.end(), std::back_inserter(out));
        lose = std::move(out);
      }
      // Overlapped selected sets and the weight they share with each tentative body.
      std::map<std::size_t, std::vector<std::int64_t>> overlap;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        for (int e : tent[i]) {
          long o = owner_of(e);
          if (o < 0) continue;
          auto& v = overlap[static_cast<std::size_t>(o)];
          v.resize(cand.size(), 0);
          v[i] += sc_.weight[static_cast<std::size_t>(e)];
        }
      }
      std::vector<std::int64_t> qmax(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) qmax[i] = quant(body_profit(cand[i], tent[i]));
      if (std::any_of(qmax.begin(), qmax.end(), [](std::int64_t q) { return q < 1; })) continue;

      std::vector<std::int64_t> x(cand.size(), 1);
      for (;;) {
        consider(cand, tent, overlap, x, released_pot, best);
        std::size_t i = 0;
        while (i < x.size() && ++x[i] > qmax[i]) x[i++] = 1;
        if (i == x.size()) break;
      }
    }
    return best;
  }

  void consider(const std::vector<std::size_t>& cand, const std::vector<std::vector<int>>& tent,
                const std::map<std::size_t, std::vector<std::int64_t>>& overlap, const std::vector<std::int64_t>& x,
                double released_pot, std::optional<Plan>& best) {
    Plan plan;
    plan.inserted = cand;
    double removed_pot = released_pot;
    std::vector<std::size_t> kept;
    for (const auto& [a, shares] : overlap) {
      double qa = static_cast<double>(quant(body_profit(a, bodies_.at(a))));
      double gain = 0;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        gain += overlap_gain(static_cast<double>(x[i]), static_cast<double>(shares[i]) / static_cast<double>(step_),
                             p_.alpha);
      }
      // Ties keep A and trim the inserted sets.
      if (gain > pw(qa)) {
        plan.removed.push_back(a);
        removed_pot += pw(qa);
      } else {
        kept.push_back(a);
      }
    }
    double new_pot = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<int> body;
      for (int e : tent[i]) {
        long o = owner_[static_cast<std::size_t>(e)];
        bool blocked = o >= 0 && std::find(kept.begin(), kept.end(), static_cast<std::size_t>(o)) != kept.end();
        if (!blocked) body.push_back(e);
      }
      std::int64_t q = quant(body_profit(cand[i], body));
      if (q != x[i]) return;  // inconsistent assumption
      new_pot += pw(static_cast<double>(q));
      plan.bodies.push_back(std::move(body));
    }
    plan.kept_overlaps = kept;
    plan.gain = new_pot - removed_pot;
    if (plan.gain > p_.delta && (!best || plan.gain > best->gain)) best = std::move(plan);
  }

  TwoImpMove apply(const Plan& plan) {
    TwoImpMove mv;
    mv.inserted = plan.inserted;
    mv.inserted_bodies = plan.bodies;
    mv.potential_gain = plan.gain;
    for (auto x : plan.inserted) {
      if (bodies_.count(x)) erase(x);
    }
    for (auto a : plan.removed) {
      if (!bodies_.count(a)) continue;
      mv.overlaps.push_back({a, bodies_.at(a), true});
      erase(a);
    }
    for (auto a : plan.kept_overlaps) mv.overlaps.push_back({a, bodies_.at(a), false});
    for (std::size_t i = 0; i < plan.inserted.size(); ++i) insert(plan.inserted[i], plan.bodies[i]);
    return mv;
  }

  const WeightedSetSystem& inst_;
  TwoImpParams p_;
  ScaledSystem sc_;
  std::int64_t step_ = 1;
  std::vector<long> owner_;
  std::map<std::size_t, std::vector<int>> bodies_;
  std::vector<std::vector<std::size_t>> candidates_;
};

}  // namespace detail

/// Greedy start, then insertions of one or two named sets under every
/// consistent quantized profit assumption.
inline TwoImpResult mpc_2imp_traced(const WeightedSetSystem& inst, const TwoImpParams& params = {}) {
  detail::TwoImp engine(inst, params);
  engine.seed(mpc_greedy(inst).selected);
  return engine.run();
}

inline MpcSolution mpc_2imp(const WeightedSetSystem& inst, const TwoImpParams& params = {}) {
  return mpc_2imp_traced(inst, params).solution;
}

}  // namespace packcover
