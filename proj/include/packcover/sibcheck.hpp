#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "packcover/core/types.hpp"

namespace packcover {

/// Parental allele sets per locus plus, for every group member and locus,
/// whether its pair is read swapped.
struct OrientationWitness {
  std::vector<std::vector<int>> father;        // F_j
  std::vector<std::vector<int>> mother;        // M_j
  std::vector<std::vector<bool>> swapped;      // [member index][locus]
};

namespace detail {

inline void check_ids(const SibInstance& inst, const std::vector<int>& group) {
  for (int p : group) {
    if (p < 0 || p >= inst.size()) throw InvalidInput("individual id " + std::to_string(p + 1) + " out of range");
  }
}

inline std::vector<int> distinct_alleles(const SibInstance& inst, const std::vector<int>& group, int locus) {
  std::vector<int> d;
  for (int p : group) {
    d.push_back(inst.at(p, locus).first);
    d.push_back(inst.at(p, locus).second);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

/// Subsets of size <= 2 of a sorted set, in lexicographic order of the
/// sorted element vectors.
inline std::vector<std::vector<int>> small_subsets(const std::vector<int>& d) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.push_back({d[i]});
    for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back({d[i], d[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

struct LocusWitness {
  std::vector<int> father;
  std::vector<int> mother;
};

inline std::optional<LocusWitness> locus_witness(const SibInstance& inst, const std::vector<int>& group, int locus) {
  auto d = distinct_alleles(inst, group, locus);
  if (d.size() > 4) return std::nullopt;
  auto subsets = small_subsets(d);
  for (const auto& f : subsets) {
    for (const auto& m : subsets) {
      bool ok = true;
      for (int p : group) {
        const auto& pr = inst.at(p, locus);
        bool as_given = contains(f, pr.first) && contains(m, pr.second);
        bool flipped = contains(f, pr.second) && contains(m, pr.first);
        if (!as_given && !flipped) {
          ok = false;
          break;
        }
      }
      if (ok) return LocusWitness{f, m};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// At most four distinct alleles per locus across the group.
inline bool check_4allele(const SibInstance& inst, const std::vector<int>& group) {
  detail::check_ids(inst, group);
  for (int j = 0; j < inst.locus_count(); ++j) {
    if (detail::distinct_alleles(inst, group, j).size() > 4) return false;
  }
  return true;
}

/// Lexicographically smallest (F_j, M_j) per locus, or nullopt when the group
/// violates the 2-allele condition.
inline std::optional<OrientationWitness> witness_2allele(const SibInstance& inst, const std::vector<int>& group) {
  detail::check_ids(inst, group);
  OrientationWitness w;
  w.swapped.assign(group.size(), std::vector<bool>(static_cast<std::size_t>(inst.locus_count()), false));
  for (int j = 0; j < inst.locus_count(); ++j) {
    auto lw = detail::locus_witness(inst, group, j);
    if (!lw) return std::nullopt;
    for (std::size_t i = 0; i < group.size(); ++i) {
      const auto& pr = inst.at(group[i], j);
      bool as_given = detail::contains(lw->father, pr.first) && detail::contains(lw->mother, pr.second);
      w.swapped[i][static_cast<std::size_t>(j)] = !as_given;
    }
    w.father.push_back(std::move(lw->father));
    w.mother.push_back(std::move(lw->mother));
  }
  return w;
}

inline bool check_2allele(const SibInstance& inst, const std::vector<int>& group) {
  detail::check_ids(inst, group);
  for (int j = 0; j < inst.locus_count(); ++j) {
    if (!detail::locus_witness(inst, group, j)) return false;
  }
  return true;
}

/// Replays a witness: every oriented pair lands in (F_j, M_j), |F_j|,|M_j| <= 2.
inline bool witness_is_sound(const SibInstance& inst, const std::vector<int>& group, const OrientationWitness& w) {
  if (w.father.size() != static_cast<std::size_t>(inst.locus_count()) || w.swapped.size() != group.size()) return false;
  for (int j = 0; j < inst.locus_count(); ++j) {
    const auto& f = w.father[static_cast<std::size_t>(j)];
    const auto& m = w.mother[static_cast<std::size_t>(j)];
    if (f.size() > 2 || m.size() > 2) return false;
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto pr = inst.at(group[i], j);
      if (w.swapped[i][static_cast<std::size_t>(j)]) std::swap(pr.first, pr.second);
      if (!detail::contains(f, pr.first) || !detail::contains(m, pr.second)) return false;
    }
  }
  return true;
}

inline bool check_group(const SibInstance& inst, const std::vector<int>& group, int k) {
  if (k == 4) return check_4allele(inst, group);
  if (k == 2) return check_2allele(inst, group);
  throw InvalidInput("allele condition k must be 2 or 4, got " + std::to_string(k));
}

/// At most two distinct labels per locus.
inline bool check_labels(const LabelCoverInstance& inst, const std::vector<int>& group) {
  for (int j = 0; j < inst.locus_count(); ++j) {
    int first = 0, second = 0, seen = 0;
    for (int p : group) {
      int v = inst.label(p, j);
      if (seen >= 1 && v == first) continue;
      if (seen >= 2 && v == second) continue;
      if (seen == 2) return false;
      (seen == 0 ? first : second) = v;
      ++seen;
    }
  }
  return true;
}

/// Enumerates every subset of {0..n-1} of size <= max_size accepted by a
/// downward-closed predicate, in lexicographic DFS order, empty set first.
inline std::vector<std::vector<int>> enumerate_closed_family(int n, int max_size,
                                                             const std::function<bool(const std::vector<int>&)>& ok,
                                                             double max_candidates = 5e7) {
  if (max_size < 1) throw InvalidInput("group size bound must be at least 1");
  double candidates = 0;
  for (int i = 0; i <= std::min(max_size, n); ++i) candidates += binomial(n, i);
  if (candidates > max_candidates) {
    throw BudgetExceeded("group enumeration over " + std::to_string(static_cast<long long>(candidates)) +
                         " subsets exceeds the configured budget");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int p = start; p < n; ++p) {
      cur.push_back(p);
      if (ok(cur)) rec(p + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<std::vector<int>> enumerate_groups(const SibInstance& inst, int k, int max_size,
                                                      double max_candidates = 5e7) {
  if (k != 2 && k != 4) throw InvalidInput("allele condition k must be 2 or 4");
  return enumerate_closed_family(
      inst.size(), max_size, [&](const std::vector<int>& g) { return check_group(inst, g, k); }, max_candidates);
}

inline std::vector<std::vector<int>> enumerate_groups(const LabelCoverInstance& inst, int max_size,
                                                      double max_candidates = 5e7) {
  return enumerate_closed_family(
      inst.size(), max_size, [&](const std::vector<int>& g) { return check_labels(inst, g); }, max_candidates);
}

}  // namespace packcover
