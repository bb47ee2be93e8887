#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "packcover/core/types.hpp"

namespace packcover {

using Json = nlohmann::json;

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline long long parse_int(const std::string& tok, int line, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  }
  if (pos != tok.size()) throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
  return v;
}

inline bool is_blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Accepts "7", "-3", "5/2" and finite decimals such as "0.25".
inline Rational parse_rational(const std::string& tok, int line = 0) {
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    auto num = detail::parse_int(tok.substr(0, slash), line, "numerator");
    auto den = detail::parse_int(tok.substr(slash + 1), line, "denominator");
    if (den == 0) throw ParseError("zero denominator in '" + tok + "'", line);
    return Rational(num, den);
  }
  auto dot = tok.find('.');
  if (dot != std::string::npos) {
    std::string whole = tok.substr(0, dot);
    std::string frac = tok.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.size() > 15) throw ParseError("bad decimal '" + tok + "'", line);
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal '" + tok + "'", line);
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(detail::parse_int(whole, line, "value"));
    r += Rational(std::stoll(frac), scale);
    return negative ? -r : r;
  }
  return Rational(detail::parse_int(tok, line, "value"));
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Integers stay JSON numbers; fractions become "p/q" strings.
inline Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json(to_string(r));
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected integer or rational string in JSON", 0);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// Graph files: "p <nodes> <edges>" (an extra word such as "edge" after "p" is
// tolerated), "e <u> <v> [weight]", comments "c ...".

struct GraphParseResult {
  Graph graph;
  std::vector<std::string> warnings;
};

inline GraphParseResult parse_graph_with_warnings(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long nodes = 0;
  long long declared_edges = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;
  bool weighted = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    auto tok = detail::split_ws(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError("duplicate header", line_no);
      std::size_t base = 1;
      if (tok.size() == 4) base = 2;
      if (tok.size() != base + 2) throw ParseError("header must be 'p <nodes> <edges>'", line_no);
      nodes = detail::parse_int(tok[base], line_no, "node count");
      declared_edges = detail::parse_int(tok[base + 1], line_no, "edge count");
      if (nodes < 0 || declared_edges < 0) throw ParseError("negative count in header", line_no);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError("edge before header", line_no);
      if (tok.size() != 3 && tok.size() != 4) throw ParseError("edge line must be 'e <u> <v> [w]'", line_no);
      auto u = detail::parse_int(tok[1], line_no, "node id");
      auto v = detail::parse_int(tok[2], line_no, "node id");
      if (u < 1 || v < 1 || u > nodes || v > nodes) throw ParseError("node id out of range", line_no);
      if (u == v) throw ParseError("self-loop at node " + tok[1], line_no);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      if (tok.size() == 4) {
        if (!weighted && !edges.empty() && edges.size() > 1) throw ParseError("mixed weighted and unweighted edges", line_no);
        weighted = true;
        Rational w = parse_rational(tok[3], line_no);
        if (w < 0) throw ParseError("negative edge weight", line_no);
        weights.push_back(w);
      } else if (weighted) {
        throw ParseError("mixed weighted and unweighted edges", line_no);
      }
    } else {
      throw ParseError("unknown line type '" + tok[0] + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing 'p' header", 0);
  GraphParseResult result{Graph(static_cast<int>(nodes), edges, weights), {}};
  result.warnings = result.graph.warnings();
  if (static_cast<long long>(edges.size()) != declared_edges) {
    result.warnings.push_back("header declares " + std::to_string(declared_edges) + " edges, found " +
                              std::to_string(edges.size()));
  }
  return result;
}

inline Graph parse_graph(const std::string& text) { return parse_graph_with_warnings(text).graph; }

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    out << "e " << u + 1 << ' ' << v + 1;
    if (g.has_weights()) out << ' ' << to_string(g.weights()[i]);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Set-system files: "u <n>", "w <i> <weight>", "s <cost> <e1> <e2> ...".

inline WeightedSetSystem parse_set_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<Rational> weights;
  std::vector<std::vector<int>> sets;
  std::vector<Rational> costs;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    auto tok = detail::split_ws(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "u") {
      if (n >= 0) throw ParseError("duplicate universe header", line_no);
      if (tok.size() != 2) throw ParseError("header must be 'u <n>'", line_no);
      n = detail::parse_int(tok[1], line_no, "universe size");
      if (n < 0) throw ParseError("negative universe size", line_no);
      weights.assign(static_cast<std::size_t>(n), Rational(1));
    } else if (n < 0) {
      throw ParseError("line before 'u' header", line_no);
    } else if (tok[0] == "w") {
      if (tok.size() != 3) throw ParseError("weight line must be 'w <i> <weight>'", line_no);
      auto i = detail::parse_int(tok[1], line_no, "element id");
      if (i < 1 || i > n) throw ParseError("element id " + tok[1] + " out of range", line_no);
      Rational w = parse_rational(tok[2], line_no);
      if (w < 0) throw ParseError("negative element weight", line_no);
      weights[static_cast<std::size_t>(i - 1)] = w;
    } else if (tok[0] == "s") {
      if (tok.size() < 2) throw ParseError("set line must be 's <cost> <e1> ...'", line_no);
      Rational q = parse_rational(tok[1], line_no);
      if (q < 0) throw ParseError("negative set cost", line_no);
      std::vector<int> elems;
      for (std::size_t t = 2; t < tok.size(); ++t) {
        auto e = detail::parse_int(tok[t], line_no, "element id");
        if (e < 1 || e > n) throw ParseError("element id " + tok[t] + " out of range", line_no);
        elems.push_back(static_cast<int>(e - 1));
      }
      sets.push_back(std::move(elems));
      costs.push_back(q);
    } else {
      throw ParseError("unknown line type '" + tok[0] + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing 'u' header", 0);
  return WeightedSetSystem(static_cast<int>(n), std::move(sets), std::move(weights), std::move(costs));
}

inline std::string serialize_set_system(const WeightedSetSystem& s) {
  std::ostringstream out;
  out << "u " << s.universe_size() << '\n';
  for (int i = 0; i < s.universe_size(); ++i) {
    if (s.weight(i) != 1) out << "w " << i + 1 << ' ' << to_string(s.weight(i)) << '\n';
  }
  for (std::size_t j = 0; j < s.set_count(); ++j) {
    out << "s " << to_string(s.cost(j));
    for (int e : s.set(j)) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Genotype TSV: header "id l1a l1b l2a l2b ...", one row per individual.
// Fields may be separated by tabs or spaces.

inline SibInstance parse_sib_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::size_t columns = 0;
  std::vector<std::vector<AllelePair>> rows;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line) || line[0] == '#') continue;
    auto tok = detail::split_ws(line);
    if (columns == 0) {
      if ((tok.size() - 1) % 2 != 0) throw ParseError("header must list two columns per locus", line_no);
      columns = tok.size();
      continue;
    }
    if (tok.size() != columns) {
      throw ParseError("row has " + std::to_string(tok.size()) + " columns, header has " + std::to_string(columns),
                       line_no);
    }
    std::vector<AllelePair> row;
    for (std::size_t c = 1; c + 1 < columns; c += 2) {
      row.push_back({static_cast<int>(detail::parse_int(tok[c], line_no, "allele")),
                     static_cast<int>(detail::parse_int(tok[c + 1], line_no, "allele"))});
    }
    names.push_back(tok[0]);
    rows.push_back(std::move(row));
  }
  int loci = columns == 0 ? 0 : static_cast<int>((columns - 1) / 2);
  return SibInstance(std::move(rows), loci, std::move(names));
}

inline std::string serialize_sib_instance(const SibInstance& s) {
  std::ostringstream out;
  out << "id";
  for (int j = 0; j < s.locus_count(); ++j) out << "\tl" << j + 1 << "a\tl" << j + 1 << 'b';
  out << '\n';
  for (int p = 0; p < s.size(); ++p) {
    out << s.names()[static_cast<std::size_t>(p)];
    for (int j = 0; j < s.locus_count(); ++j) out << '\t' << s.at(p, j).first << '\t' << s.at(p, j).second;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// 3-LIN-2 files: "l <variables> <equations>", then "q <lit> <lit> <lit> <b>"
// where a literal is a 1-based variable id, negative when negated.

inline Lin2System parse_lin2(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long vars = -1;
  long long declared = 0;
  std::vector<Lin2Equation> eqs;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    auto tok = detail::split_ws(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "l") {
      if (tok.size() != 3) throw ParseError("header must be 'l <variables> <equations>'", line_no);
      vars = detail::parse_int(tok[1], line_no, "variable count");
      declared = detail::parse_int(tok[2], line_no, "equation count");
    } else if (tok[0] == "q") {
      if (vars < 0) throw ParseError("equation before header", line_no);
      if (tok.size() != 5) throw ParseError("equation must be 'q <l1> <l2> <l3> <b>'", line_no);
      Lin2Equation eq;
      for (int i = 0; i < 3; ++i) {
        auto lit = detail::parse_int(tok[static_cast<std::size_t>(i + 1)], line_no, "literal");
        if (lit == 0 || lit > vars || -lit > vars) throw ParseError("literal out of range", line_no);
        eq.literals[static_cast<std::size_t>(i)] = {static_cast<int>((lit < 0 ? -lit : lit) - 1), lit < 0};
      }
      auto b = detail::parse_int(tok[4], line_no, "right-hand side");
      if (b != 0 && b != 1) throw ParseError("right-hand side must be 0 or 1", line_no);
      eq.rhs = static_cast<int>(b);
      eqs.push_back(eq);
    } else {
      throw ParseError("unknown line type '" + tok[0] + "'", line_no);
    }
  }
  if (vars < 0) throw ParseError("missing 'l' header", 0);
  if (static_cast<long long>(eqs.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " equations, found " + std::to_string(eqs.size()),
                     0);
  }
  return Lin2System(static_cast<int>(vars), std::move(eqs));
}

inline std::string serialize_lin2(const Lin2System& s) {
  std::ostringstream out;
  out << "l " << s.variable_count() << ' ' << s.equations().size() << '\n';
  for (const auto& eq : s.equations()) {
    out << 'q';
    for (const auto& lit : eq.literals) out << ' ' << (lit.negated ? -(lit.variable + 1) : lit.variable + 1);
    out << ' ' << eq.rhs << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Digests

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_digest(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solution JSON. Ids are 1-based on disk.

namespace detail {
inline Json one_based(const std::vector<int>& ids) {
  Json arr = Json::array();
  for (int v : ids) arr.push_back(v + 1);
  return arr;
}
inline std::vector<int> zero_based(const Json& arr) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(v.get<int>() - 1);
  return out;
}
inline Json one_based_indices(const std::vector<std::size_t>& ids) {
  Json arr = Json::array();
  for (auto v : ids) arr.push_back(v + 1);
  return arr;
}
inline std::vector<std::size_t> zero_based_indices(const Json& arr) {
  std::vector<std::size_t> out;
  for (const auto& v : arr) {
    auto x = v.get<long long>();
    if (x < 1) throw ParseError("index must be positive", 0);
    out.push_back(static_cast<std::size_t>(x - 1));
  }
  return out;
}
}  // namespace detail

inline Json to_json(const PackingSolution& s) {
  Json members = Json::array();
  for (const auto& m : s.members) members.push_back(detail::one_based(m));
  return Json{{"kind", "packing"},
              {"selected", detail::one_based_indices(s.selected)},
              {"members", members},
              {"objective", rational_json(s.objective)}};
}

inline Json to_json(const CoverSolution& s) {
  Json groups = Json::array();
  for (const auto& g : s.groups) groups.push_back(detail::one_based(g));
  return Json{{"kind", "cover"}, {"groups", groups}, {"objective", rational_json(s.objective)}};
}

inline Json to_json(const MpcSolution& s) {
  return Json{{"kind", "mpc"},
              {"selected", detail::one_based_indices(s.selected)},
              {"objective", rational_json(s.objective)}};
}

inline Json to_json(const Cov2Solution& s) {
  return Json{{"kind", "cov2"},
              {"selected", detail::one_based_indices(s.selected)},
              {"twice_covered", detail::one_based(s.twice_covered)},
              {"objective", rational_json(s.objective)}};
}

inline PackingSolution packing_from_json(const Json& j) {
  PackingSolution s;
  if (j.contains("selected")) s.selected = detail::zero_based_indices(j.at("selected"));
  if (j.contains("members")) {
    for (const auto& m : j.at("members")) s.members.push_back(detail::zero_based(m));
  }
  if (j.contains("objective")) s.objective = rational_from_json(j.at("objective"));
  return s;
}

inline CoverSolution cover_from_json(const Json& j) {
  CoverSolution s;
  for (const auto& g : j.at("groups")) s.groups.push_back(detail::zero_based(g));
  if (j.contains("objective")) s.objective = rational_from_json(j.at("objective"));
  return s;
}

inline MpcSolution mpc_from_json(const Json& j) {
  MpcSolution s;
  s.selected = detail::zero_based_indices(j.at("selected"));
  if (j.contains("objective")) s.objective = rational_from_json(j.at("objective"));
  return s;
}

inline Cov2Solution cov2_from_json(const Json& j) {
  Cov2Solution s;
  s.selected = detail::zero_based_indices(j.at("selected"));
  if (j.contains("twice_covered")) s.twice_covered = detail::zero_based(j.at("twice_covered"));
  if (j.contains("objective")) s.objective = rational_from_json(j.at("objective"));
  return s;
}

}  // namespace packcover
