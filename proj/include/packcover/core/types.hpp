#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace boost {
// Under C++20 rewritten comparisons, boost's mixed-type rational == int
// overloads call each other forever. Exact non-template overloads win.
#define PACKCOVER_RATIONAL_EQ(T)                                          \
  inline constexpr bool operator==(const rational<std::int64_t>& a, T b) { \
    return a.denominator() == 1 && a.numerator() == b;                     \
  }                                                                        \
  inline constexpr bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
PACKCOVER_RATIONAL_EQ(int)
PACKCOVER_RATIONAL_EQ(long)
PACKCOVER_RATIONAL_EQ(long long)
#undef PACKCOVER_RATIONAL_EQ
}  // namespace boost

namespace packcover {

/// Exact objective values. Scores, profits and potentials never go through
/// floating point so that ratio assertions can be exact.
using Rational = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or solution text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally invalid input (self-loop, id out of range, negative weight,
/// wrong degree for a reduction, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Raised by exact solvers and enumerators instead of silently returning a
/// heuristic answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Counts search nodes against a Budget and throws once it is exhausted.
class BudgetTracker {
 public:
  explicit BudgetTracker(const Budget& budget, std::string what = "search")
      : budget_(budget),
        what_(std::move(what)),
        start_(std::chrono::steady_clock::now()) {}

  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded(what_ + ": node budget of " +
                           std::to_string(budget_.max_nodes) + " exceeded");
    }
    if (budget_.time_limit && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      throw BudgetExceeded(what_ + ": time budget exceeded");
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Graph

/// Simple undirected graph with 0-based node ids. Edges are stored with
/// u < v in insertion order; duplicates are collapsed and reported through
/// warnings(). Optional nonnegative edge weights are only used by the
/// weighted densest-subgraph output of the 2-coverage reduction.
class Graph {
 public:
  Graph() = default;

  Graph(int node_count, const std::vector<std::pair<int, int>>& edges,
        const std::vector<Rational>& weights = {})
      : node_count_(node_count), adjacency_(static_cast<std::size_t>(std::max(node_count, 0))) {
    if (node_count < 0) throw InvalidInput("negative node count");
    if (!weights.empty() && weights.size() != edges.size()) {
      throw InvalidInput("edge weight count does not match edge count");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
        throw InvalidInput("edge endpoint out of range: " + std::to_string(u + 1) +
                           " " + std::to_string(v + 1));
      }
      if (u == v) throw InvalidInput("self-loop at node " + std::to_string(u + 1));
      if (u > v) std::swap(u, v);
      if (std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        warnings_.push_back("duplicate edge " + std::to_string(u + 1) + " " +
                            std::to_string(v + 1) + " collapsed");
        continue;
      }
      if (!weights.empty() && weights[i] < 0) {
        throw InvalidInput("negative edge weight");
      }
      edges_.emplace_back(u, v);
      if (!weights.empty()) weights_.push_back(weights[i]);
      adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
      adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
    }
  }

  int node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational weight(std::size_t edge) const { return weights_.empty() ? Rational(1) : weights_[edge]; }
  const std::vector<int>& neighbors(int u) const { return adjacency_[static_cast<std::size_t>(u)]; }
  int degree(int u) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(u)].size()); }
  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
  }
  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  int node_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> warnings_;
};

// ---------------------------------------------------------------------------
// Genotypes

/// Allele pair at one locus, in the order it was observed.
struct AllelePair {
  int first = 0;
  int second = 0;
  friend bool operator==(const AllelePair&, const AllelePair&) = default;
};

/// n individuals by l loci. Allele ids are opaque integers.
class SibInstance {
 public:
  SibInstance() = default;

  SibInstance(std::vector<std::vector<AllelePair>> individuals, int locus_count,
              std::vector<std::string> names = {})
      : individuals_(std::move(individuals)), locus_count_(locus_count), names_(std::move(names)) {
    if (locus_count_ < 0) throw InvalidInput("negative locus count");
    for (std::size_t p = 0; p < individuals_.size(); ++p) {
      if (individuals_[p].size() != static_cast<std::size_t>(locus_count_)) {
        throw InvalidInput("individual " + std::to_string(p + 1) + " has " +
                           std::to_string(individuals_[p].size()) + " loci, expected " +
                           std::to_string(locus_count_));
      }
    }
    if (names_.empty()) {
      for (std::size_t p = 0; p < individuals_.size(); ++p) names_.push_back(std::to_string(p + 1));
    } else if (names_.size() != individuals_.size()) {
      throw InvalidInput("name count does not match individual count");
    }
  }

  int size() const { return static_cast<int>(individuals_.size()); }
  int locus_count() const { return locus_count_; }
  const AllelePair& at(int individual, int locus) const {
    return individuals_[static_cast<std::size_t>(individual)][static_cast<std::size_t>(locus)];
  }
  const std::vector<AllelePair>& individual(int p) const { return individuals_[static_cast<std::size_t>(p)]; }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const SibInstance& a, const SibInstance& b) {
    return a.locus_count_ == b.locus_count_ && a.individuals_ == b.individuals_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::vector<AllelePair>> individuals_;
  int locus_count_ = 0;
  std::vector<std::string> names_;
};

/// One label per individual per locus; a group is feasible when every locus
/// shows at most two labels.
class LabelCoverInstance {
 public:
  LabelCoverInstance() = default;
  LabelCoverInstance(std::vector<std::vector<int>> labels, int locus_count)
      : labels_(std::move(labels)), locus_count_(locus_count) {
    for (const auto& row : labels_) {
      if (row.size() != static_cast<std::size_t>(locus_count_)) {
        throw InvalidInput("label cover instance is not rectangular");
      }
    }
  }
  int size() const { return static_cast<int>(labels_.size()); }
  int locus_count() const { return locus_count_; }
  int label(int individual, int locus) const {
    return labels_[static_cast<std::size_t>(individual)][static_cast<std::size_t>(locus)];
  }
  const std::vector<std::vector<int>>& rows() const { return labels_; }

 private:
  std::vector<std::vector<int>> labels_;
  int locus_count_ = 0;
};

// ---------------------------------------------------------------------------
// Set systems

/// Universe of weighted elements and a family of costed sets. Used as the
/// instance type for maximum profit coverage and 2-coverage.
class WeightedSetSystem {
 public:
  WeightedSetSystem() = default;

  WeightedSetSystem(int universe_size, std::vector<std::vector<int>> sets,
                    std::vector<Rational> element_weights = {}, std::vector<Rational> set_costs = {})
      : universe_size_(universe_size), sets_(std::move(sets)),
        weights_(std::move(element_weights)), costs_(std::move(set_costs)) {
    if (universe_size_ < 0) throw InvalidInput("negative universe size");
    if (weights_.empty()) weights_.assign(static_cast<std::size_t>(universe_size_), Rational(1));
    if (costs_.empty()) costs_.assign(sets_.size(), Rational(0));
    if (weights_.size() != static_cast<std::size_t>(universe_size_)) {
      throw InvalidInput("element weight count does not match universe size");
    }
    if (costs_.size() != sets_.size()) throw InvalidInput("set cost count does not match set count");
    for (const auto& w : weights_) {
      if (w < 0) throw InvalidInput("negative element weight");
    }
    for (const auto& q : costs_) {
      if (q < 0) throw InvalidInput("negative set cost");
    }
    frequency_.assign(static_cast<std::size_t>(universe_size_), 0);
    for (auto& s : sets_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (int e : s) {
        if (e < 0 || e >= universe_size_) {
          throw InvalidInput("set element " + std::to_string(e + 1) + " outside universe of " +
                             std::to_string(universe_size_));
        }
        ++frequency_[static_cast<std::size_t>(e)];
      }
      max_set_size_ = std::max(max_set_size_, static_cast<int>(s.size()));
    }
    for (int f : frequency_) max_frequency_ = std::max(max_frequency_, f);
  }

  int universe_size() const { return universe_size_; }
  std::size_t set_count() const { return sets_.size(); }
  const std::vector<int>& set(std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const Rational& weight(int element) const { return weights_[static_cast<std::size_t>(element)]; }
  const Rational& cost(std::size_t set) const { return costs_[set]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Rational>& costs() const { return costs_; }
  /// a: the largest set size.
  int max_set_size() const { return max_set_size_; }
  /// f: the largest number of sets any element belongs to.
  int max_frequency() const { return max_frequency_; }
  int frequency(int element) const { return frequency_[static_cast<std::size_t>(element)]; }

  Rational set_weight(std::size_t i) const {
    Rational total = 0;
    for (int e : sets_[i]) total += weights_[static_cast<std::size_t>(e)];
    return total;
  }

  friend bool operator==(const WeightedSetSystem& a, const WeightedSetSystem& b) {
    return a.universe_size_ == b.universe_size_ && a.sets_ == b.sets_ && a.weights_ == b.weights_ &&
           a.costs_ == b.costs_;
  }

 private:
  int universe_size_ = 0;
  std::vector<std::vector<int>> sets_;
  std::vector<Rational> weights_;
  std::vector<Rational> costs_;
  std::vector<int> frequency_;
  int max_set_size_ = 0;
  int max_frequency_ = 0;
};

/// Explicit set family with per-set weights, the input of the packing engines.
struct SetCollection {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  std::vector<Rational> weights;  // empty means unit weights

  std::size_t size() const { return sets.size(); }
  Rational weight(std::size_t i) const { return weights.empty() ? Rational(1) : weights[i]; }
  bool weighted() const { return !weights.empty(); }
  int max_set_size() const {
    int a = 0;
    for (const auto& s : sets) a = std::max(a, static_cast<int>(s.size()));
    return a;
  }
};

// ---------------------------------------------------------------------------
// 3-LIN-2

struct Literal {
  int variable = 0;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Lin2Equation {
  std::array<Literal, 3> literals{};
  int rhs = 0;
  friend bool operator==(const Lin2Equation&, const Lin2Equation&) = default;
};

class Lin2System {
 public:
  Lin2System() = default;
  Lin2System(int variable_count, std::vector<Lin2Equation> equations)
      : variable_count_(variable_count), equations_(std::move(equations)) {
    for (const auto& eq : equations_) {
      if (eq.rhs != 0 && eq.rhs != 1) throw InvalidInput("equation right-hand side must be 0 or 1");
      for (const auto& lit : eq.literals) {
        if (lit.variable < 0 || lit.variable >= variable_count_) {
          throw InvalidInput("literal variable out of range");
        }
      }
    }
  }
  int variable_count() const { return variable_count_; }
  const std::vector<Lin2Equation>& equations() const { return equations_; }

  bool satisfied(const Lin2Equation& eq, const std::vector<int>& assignment) const {
    int sum = 0;
    for (const auto& lit : eq.literals) sum += assignment[static_cast<std::size_t>(lit.variable)] ^ (lit.negated ? 1 : 0);
    return (sum & 1) == eq.rhs;
  }
  int violated_count(const std::vector<int>& assignment) const {
    int violated = 0;
    for (const auto& eq : equations_) violated += satisfied(eq, assignment) ? 0 : 1;
    return violated;
  }

  friend bool operator==(const Lin2System& a, const Lin2System& b) {
    return a.variable_count_ == b.variable_count_ && a.equations_ == b.equations_;
  }

 private:
  int variable_count_ = 0;
  std::vector<Lin2Equation> equations_;
};

// ---------------------------------------------------------------------------
// Solutions

/// Disjoint selection. `selected` indexes the collection the solver ran on;
/// `members` carries the selected sets themselves (node triples for
/// triangle packing) so a solution can be checked without the collection.
struct PackingSolution {
  std::vector<std::size_t> selected;
  std::vector<std::vector<int>> members;
  Rational objective = 0;
};

/// Groups of individual ids covering every individual.
struct CoverSolution {
  std::vector<std::vector<int>> groups;
  Rational objective = 0;
};

struct MpcSolution {
  std::vector<std::size_t> selected;
  Rational objective = 0;
};

struct Cov2Solution {
  std::vector<std::size_t> selected;
  std::vector<int> twice_covered;
  Rational objective = 0;
};

struct VerificationReport {
  Rational objective = 0;
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// ---------------------------------------------------------------------------
// Small numeric helpers shared by the solvers.

/// Scales rationals by the lcm of their denominators. Returns the integer
/// numerators and the common scale.
inline std::pair<std::vector<std::int64_t>, std::int64_t> to_scaled_integers(const std::vector<Rational>& values) {
  std::int64_t scale = 1;
  for (const auto& v : values) scale = std::lcm(scale, v.denominator());
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.numerator() * (scale / v.denominator()));
  return {out, scale};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Saturating binomial coefficient, used by enumeration budget guards.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace packcover
