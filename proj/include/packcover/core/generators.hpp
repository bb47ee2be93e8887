#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "packcover/core/types.hpp"

namespace packcover {

/// Derives independent stream seeds from one user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [lo, hi]. Implemented directly on the engine output so
/// results do not depend on the standard library's distribution code.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
    std::swap(v[i - 1], v[j]);
  }
}

/// Erdos-Renyi G(n, p).
inline Graph gen_random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("node count must be nonnegative");
  if (edge_probability < 0.0 || edge_probability > 1.0) throw InvalidInput("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Uniform simple cubic graph by the configuration model with rejection.
inline Graph gen_random_cubic(int n, std::uint64_t seed, int max_retries = 10000) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("cubic graphs need an even node count of at least 4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    shuffle_deterministic(points, rng);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      int u = std::min(points[i], points[i + 1]);
      int v = std::max(points[i], points[i + 1]);
      if (u == v || !seen.insert({u, v}).second) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (ok) {
      std::sort(edges.begin(), edges.end());
      return Graph(n, edges);
    }
  }
  throw InvalidInput("no simple cubic graph found within the retry limit");
}

/// Every allele drawn uniformly from 1..allele_pool.
inline SibInstance gen_random_sib(int n, int loci, int allele_pool, std::uint64_t seed) {
  if (n < 0 || loci < 0 || allele_pool < 1) throw InvalidInput("invalid genotype generator parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<AllelePair>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    for (int j = 0; j < loci; ++j) {
      int a = static_cast<int>(uniform_int(rng, 1, allele_pool));
      int b = static_cast<int>(uniform_int(rng, 1, allele_pool));
      row.push_back({a, b});
    }
  }
  return SibInstance(std::move(rows), loci);
}

/// Genotypes of simulated families: each family draws two parents, children
/// inherit one allele from each. Produces instances with large feasible groups.
inline SibInstance gen_family_sib(int n, int loci, int allele_pool, int families, std::uint64_t seed) {
  if (n < 0 || loci < 0 || allele_pool < 1 || families < 1) throw InvalidInput("invalid family generator parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::array<int, 4>>> parents(static_cast<std::size_t>(families));
  for (auto& fam : parents) {
    for (int j = 0; j < loci; ++j) {
      std::array<int, 4> alleles{};
      for (auto& a : alleles) a = static_cast<int>(uniform_int(rng, 1, allele_pool));
      fam.push_back(alleles);
    }
  }
  std::vector<std::vector<AllelePair>> rows;
  for (int p = 0; p < n; ++p) {
    auto f = static_cast<std::size_t>(uniform_int(rng, 0, families - 1));
    std::vector<AllelePair> row;
    for (int j = 0; j < loci; ++j) {
      const auto& al = parents[f][static_cast<std::size_t>(j)];
      int a = al[static_cast<std::size_t>(uniform_int(rng, 0, 1))];
      int b = al[static_cast<std::size_t>(uniform_int(rng, 2, 3))];
      if (uniform_int(rng, 0, 1) == 1) std::swap(a, b);
      row.push_back({a, b});
    }
    rows.push_back(std::move(row));
  }
  return SibInstance(std::move(rows), loci);
}

struct SystemGenOptions {
  int max_weight = 5;    // element weights uniform in 1..max_weight
  int max_cost = 4;      // set costs uniform in 0..max_cost
  bool exact_size = false;  // every set has exactly a elements
};

/// m random sets over n elements, sizes in 1..a.
inline WeightedSetSystem gen_random_system(int n, int m, int a, std::uint64_t seed,
                                           const SystemGenOptions& opts = {}) {
  if (n < 1 || m < 0 || a < 1 || a > n) throw InvalidInput("invalid set-system generator parameters");
  std::mt19937_64 rng(seed);
  std::vector<Rational> weights;
  for (int i = 0; i < n; ++i) weights.emplace_back(uniform_int(rng, 1, opts.max_weight));
  std::vector<std::vector<int>> sets;
  std::vector<Rational> costs;
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int j = 0; j < m; ++j) {
    int size = opts.exact_size ? a : static_cast<int>(uniform_int(rng, 1, a));
    shuffle_deterministic(pool, rng);
    std::vector<int> s(pool.begin(), pool.begin() + size);
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
    costs.emplace_back(uniform_int(rng, 0, opts.max_cost));
  }
  return WeightedSetSystem(n, std::move(sets), std::move(weights), std::move(costs));
}

/// Random 3-LIN-2 system with distinct variables per equation.
inline Lin2System gen_random_lin2(int variables, int equations, std::uint64_t seed) {
  if (variables < 3 || equations < 0) throw InvalidInput("need at least 3 variables");
  std::mt19937_64 rng(seed);
  std::vector<Lin2Equation> eqs;
  std::vector<int> pool(static_cast<std::size_t>(variables));
  std::iota(pool.begin(), pool.end(), 0);
  for (int e = 0; e < equations; ++e) {
    shuffle_deterministic(pool, rng);
    Lin2Equation eq;
    for (std::size_t i = 0; i < 3; ++i) eq.literals[i] = {pool[i], uniform_int(rng, 0, 1) == 1};
    eq.rhs = static_cast<int>(uniform_int(rng, 0, 1));
    eqs.push_back(eq);
  }
  return Lin2System(variables, std::move(eqs));
}

/// Named small graphs used across tests and suites.
inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace packcover
