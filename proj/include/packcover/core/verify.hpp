#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/sibcheck.hpp"

namespace packcover {

namespace detail {

inline void check_reported(VerificationReport& r, const Rational& reported) {
  if (reported != r.objective) {
    r.violations.push_back("reported objective " + to_string(reported) + " differs from recomputed " +
                           to_string(r.objective));
  }
}

inline std::string group_text(const std::vector<int>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i] + 1);
  return s + "}";
}

}  // namespace detail

/// Node-disjoint triangles of g, read from `members`.
inline VerificationReport verify_triangle_packing(const Graph& g, const PackingSolution& sol) {
  VerificationReport r;
  std::vector<int> owner(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t t = 0; t < sol.members.size(); ++t) {
    const auto& tri = sol.members[t];
    if (tri.size() != 3) {
      r.violations.push_back("member " + std::to_string(t + 1) + " does not have three nodes");
      continue;
    }
    bool in_range = std::all_of(tri.begin(), tri.end(), [&](int v) { return v >= 0 && v < g.node_count(); });
    if (!in_range) {
      r.violations.push_back("member " + std::to_string(t + 1) + " has a node out of range");
      continue;
    }
    if (!g.has_edge(tri[0], tri[1]) || !g.has_edge(tri[1], tri[2]) || !g.has_edge(tri[0], tri[2])) {
      r.violations.push_back("member " + detail::group_text(tri) + " is not a triangle");
    }
    for (int v : tri) {
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0) {
        r.violations.push_back("node " + std::to_string(v + 1) + " used by triangles " + std::to_string(o + 1) +
                               " and " + std::to_string(t + 1));
      }
      o = static_cast<int>(t);
    }
  }
  r.objective = static_cast<std::int64_t>(sol.members.size());
  detail::check_reported(r, sol.objective);
  return r;
}

/// Pairwise-disjoint selection from an explicit collection.
inline VerificationReport verify_packing(const SetCollection& c, const PackingSolution& sol) {
  VerificationReport r;
  std::vector<long> owner(static_cast<std::size_t>(c.universe_size), -1);
  for (std::size_t s : sol.selected) {
    if (s >= c.size()) {
      r.violations.push_back("set index " + std::to_string(s + 1) + " out of range");
      continue;
    }
    r.objective += c.weight(s);
    for (int e : c.sets[s]) {
      auto& o = owner[static_cast<std::size_t>(e)];
      if (o >= 0) {
        r.violations.push_back("element " + std::to_string(e + 1) + " in sets " + std::to_string(o + 1) + " and " +
                               std::to_string(s + 1));
      }
      o = static_cast<long>(s);
    }
  }
  detail::check_reported(r, sol.objective);
  return r;
}

namespace detail {

template <typename Feasible>
VerificationReport verify_cover_generic(int n, const CoverSolution& sol, int max_group, Feasible&& feasible) {
  VerificationReport r;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& g : sol.groups) {
    bool in_range = std::all_of(g.begin(), g.end(), [&](int p) { return p >= 0 && p < n; });
    if (!in_range) {
      r.violations.push_back("group " + group_text(g) + " has an individual out of range");
      continue;
    }
    if (g.empty()) r.violations.push_back("empty group");
    if (max_group > 0 && static_cast<int>(g.size()) > max_group) {
      r.violations.push_back("group " + group_text(g) + " exceeds size " + std::to_string(max_group));
    }
    if (!feasible(g)) r.violations.push_back("group " + group_text(g) + " violates the allele condition");
    for (int p : g) covered[static_cast<std::size_t>(p)] = 1;
  }
  for (int p = 0; p < n; ++p) {
    if (!covered[static_cast<std::size_t>(p)]) r.violations.push_back("individual " + std::to_string(p + 1) + " not covered");
  }
  r.objective = static_cast<std::int64_t>(sol.groups.size());
  check_reported(r, sol.objective);
  return r;
}

}  // namespace detail

/// Every individual covered, every group feasible under k (and of size at
/// most max_group when positive).
inline VerificationReport verify_cover(const SibInstance& inst, int k, const CoverSolution& sol, int max_group = 0) {
  if (k != 2 && k != 4) throw InvalidInput("allele condition k must be 2 or 4");
  return detail::verify_cover_generic(inst.size(), sol, max_group,
                                      [&](const std::vector<int>& g) { return check_group(inst, g, k); });
}

inline VerificationReport verify_cover(const LabelCoverInstance& inst, const CoverSolution& sol, int max_group = 0) {
  return detail::verify_cover_generic(inst.size(), sol, max_group,
                                      [&](const std::vector<int>& g) { return check_labels(inst, g); });
}

inline VerificationReport verify_mpc(const WeightedSetSystem& sys, const MpcSolution& sol) {
  VerificationReport r;
  std::vector<char> covered(static_cast<std::size_t>(sys.universe_size()), 0);
  std::vector<char> seen(sys.set_count(), 0);
  for (std::size_t s : sol.selected) {
    if (s >= sys.set_count()) {
      r.violations.push_back("set index " + std::to_string(s + 1) + " out of range");
      continue;
    }
    if (seen[s]) {
      r.violations.push_back("set " + std::to_string(s + 1) + " selected twice");
      continue;
    }
    seen[s] = 1;
    r.objective -= sys.cost(s);
    for (int e : sys.set(s)) {
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = 1;
        r.objective += sys.weight(e);
      }
    }
  }
  detail::check_reported(r, sol.objective);
  return r;
}

inline VerificationReport verify_cov2(const WeightedSetSystem& sys, int k, const Cov2Solution& sol) {
  VerificationReport r;
  if (static_cast<int>(sol.selected.size()) > k) {
    r.violations.push_back("selects " + std::to_string(sol.selected.size()) + " sets, more than k = " +
                           std::to_string(k));
  }
  std::vector<int> count(static_cast<std::size_t>(sys.universe_size()), 0);
  std::vector<char> seen(sys.set_count(), 0);
  for (std::size_t s : sol.selected) {
    if (s >= sys.set_count()) {
      r.violations.push_back("set index " + std::to_string(s + 1) + " out of range");
      continue;
    }
    if (seen[s]) {
      r.violations.push_back("set " + std::to_string(s + 1) + " selected twice");
      continue;
    }
    seen[s] = 1;
    for (int e : sys.set(s)) ++count[static_cast<std::size_t>(e)];
  }
  for (int e : sol.twice_covered) {
    if (e < 0 || e >= sys.universe_size() || count[static_cast<std::size_t>(e)] < 2) {
      r.violations.push_back("element " + std::to_string(e + 1) + " is not covered twice");
    }
  }
  std::int64_t twice = 0;
  for (int c : count) twice += c >= 2 ? 1 : 0;
  r.objective = twice;
  detail::check_reported(r, sol.objective);
  return r;
}

}  // namespace packcover
