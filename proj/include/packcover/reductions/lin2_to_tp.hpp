#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/generators.hpp"
#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/reductions/amplifier.hpp"
#include "packcover/reductions/equation_gadget.hpp"

namespace packcover {

/// Amplifiers with fewer than this many contacts per colour are emitted with a warning.
inline constexpr int kAmplifierFloor = 4;

/// One placed equation gadget copy.
struct GadgetCopy {
  int kind = 0;
  int equation = 0;
  int form = 0;  // 0: literals as given, 1: all literals and the rhs negated
  int replica = 0;
  int copy = 0;  // 0..2 inside its triple
  std::vector<int> nodes;  // local id -> global node
  std::array<int, 3> variable{};
  std::array<bool, 3> negated{};
};

/// Consistency fragment of one variable. The first k entries of each list are
/// the contact triangles; the third node of a contact triangle is its literal.
struct VariableFragment {
  int variable = 0;
  int k = 0;
  std::vector<Triangle> white;
  std::vector<Triangle> black;
};

struct Lin2TpCertificate {
  int m = 1;
  int m_s = 2;
  std::uint64_t seed = 0;
  int node_count = 0;
  int variable_count = 0;
  int equation_count = 0;
  std::vector<GadgetCopy> gadgets;
  std::vector<std::array<int, 3>> triples;  // gadget indices sharing self-sufficient triangles
  std::vector<VariableFragment> fragments;
  std::vector<std::string> warnings;
};

namespace detail {

inline Triangle sorted_triangle(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline PackingSolution triangles_to_packing(std::vector<Triangle> tris) {
  for (auto& t : tris) t = sorted_triangle(t);
  std::sort(tris.begin(), tris.end());
  PackingSolution p;
  for (const auto& t : tris) p.members.push_back({t[0], t[1], t[2]});
  p.objective = static_cast<std::int64_t>(p.members.size());
  return p;
}

}  // namespace detail

/// 3-LIN-2 system with 2n equations to a triangle-packing graph on 228·n·m_S
/// nodes, m_S = 2m.
inline std::pair<Graph, Lin2TpCertificate> lin2_to_tp(const Lin2System& sys, int m, std::uint64_t seed) {
  if (m < 1) throw InvalidInput("replication m must be at least 1");
  Lin2TpCertificate cert;
  cert.m = m;
  cert.m_s = 2 * m;
  cert.seed = seed;
  cert.variable_count = sys.variable_count();
  cert.equation_count = static_cast<int>(sys.equations().size());

  int next = 0;
  std::vector<std::pair<int, int>> edges;
  auto add_triangle = [&](int a, int b, int c) {
    edges.emplace_back(a, b);
    edges.emplace_back(a, c);
    edges.emplace_back(b, c);
  };

  // literal global ids per variable and colour, in placement order
  std::vector<std::vector<int>> positive(static_cast<std::size_t>(sys.variable_count()));
  std::vector<std::vector<int>> negative(static_cast<std::size_t>(sys.variable_count()));

  for (int r = 0; r < m; ++r) {
    for (int e = 0; e < cert.equation_count; ++e) {
      const auto& eq = sys.equations()[static_cast<std::size_t>(e)];
      for (int form = 0; form < 2; ++form) {
        const int kind = eq.rhs ^ form;
        const auto& gadget = synth_equation_gadget(kind);
        std::array<int, 3> triple{};
        for (int c = 0; c < 3; ++c) {
          GadgetCopy gc;
          gc.kind = kind;
          gc.equation = e;
          gc.form = form;
          gc.replica = r;
          gc.copy = c;
          for (int v = 0; v < gadget.node_count; ++v) gc.nodes.push_back(next++);
          for (auto [u, v] : gadget.edges)
            edges.emplace_back(gc.nodes[static_cast<std::size_t>(u)], gc.nodes[static_cast<std::size_t>(v)]);
          for (int i = 0; i < 3; ++i) {
            const auto& lit = eq.literals[static_cast<std::size_t>(i)];
            gc.variable[static_cast<std::size_t>(i)] = lit.variable;
            gc.negated[static_cast<std::size_t>(i)] = lit.negated != (form == 1);
            int node = gc.nodes[static_cast<std::size_t>(gadget.literals[static_cast<std::size_t>(i)])];
            auto& bucket = gc.negated[static_cast<std::size_t>(i)] ? negative : positive;
            bucket[static_cast<std::size_t>(lit.variable)].push_back(node);
          }
          triple[static_cast<std::size_t>(c)] = static_cast<int>(cert.gadgets.size());
          cert.gadgets.push_back(std::move(gc));
        }
        for (int s : gadget.self_sufficient) {
          auto node = [&](int c) {
            return cert.gadgets[static_cast<std::size_t>(triple[static_cast<std::size_t>(c)])].nodes[static_cast<std::size_t>(s)];
          };
          add_triangle(node(0), node(1), node(2));
        }
        cert.triples.push_back(triple);
      }
    }
  }

  for (int x = 0; x < sys.variable_count(); ++x) {
    const auto& pos = positive[static_cast<std::size_t>(x)];
    const auto& neg = negative[static_cast<std::size_t>(x)];
    if (pos.empty()) continue;
    const int k = static_cast<int>(pos.size());
    if (k < kAmplifierFloor) {
      cert.warnings.push_back("variable " + std::to_string(x + 1) + ": amplifier k=" + std::to_string(k) +
                              " below floor " + std::to_string(kAmplifierFloor) + ", consistency not guaranteed");
    }
    auto amp = build_amplifier(k, splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(x + 1))));
    auto frag = amplifier_to_tp_fragment(amp);
    const int base = next;
    next += static_cast<int>(frag.edge_of_node.size());
    VariableFragment vf;
    vf.variable = x;
    vf.k = k;
    std::vector<Triangle> white_rest, black_rest;
    auto wc = amp.white_contacts();
    auto bc = amp.black_contacts();
    for (int u = 0; u < amp.node_count(); ++u) {
      Triangle t = frag.triangle[static_cast<std::size_t>(u)];
      for (int& v : t) {
        if (v >= 0) v += base;
      }
      if (Amplifier::is_contact(u)) {
        int idx = (u % 14 == 0) ? u / 14 : (u - 7) / 14;
        t[2] = Amplifier::is_white(u) ? pos[static_cast<std::size_t>(idx)] : neg[static_cast<std::size_t>(idx)];
      }
      add_triangle(t[0], t[1], t[2]);
      if (Amplifier::is_contact(u)) continue;
      (Amplifier::is_white(u) ? white_rest : black_rest).push_back(t);
    }
    for (int i = 0; i < k; ++i) {
      for (int side = 0; side < 2; ++side) {
        int u = side == 0 ? wc[static_cast<std::size_t>(i)] : bc[static_cast<std::size_t>(i)];
        Triangle t = frag.triangle[static_cast<std::size_t>(u)];
        t[0] += base;
        t[1] += base;
        t[2] = side == 0 ? pos[static_cast<std::size_t>(i)] : neg[static_cast<std::size_t>(i)];
        (side == 0 ? vf.white : vf.black).push_back(t);
      }
    }
    vf.white.insert(vf.white.end(), white_rest.begin(), white_rest.end());
    vf.black.insert(vf.black.end(), black_rest.begin(), black_rest.end());
    cert.fragments.push_back(std::move(vf));
  }
  cert.node_count = next;
  Graph g(next, edges);
  return {std::move(g), std::move(cert)};
}

/// T_sol: white triangles for true variables, black for false, canonical
/// gadget covers for the resulting literal values, and the self-sufficient
/// triangles left free.
inline PackingSolution lin2_solution_to_packing(const std::vector<int>& assignment, const Lin2TpCertificate& cert) {
  if (static_cast<int>(assignment.size()) != cert.variable_count)
    throw InvalidInput("assignment size does not match the variable count");
  std::vector<Triangle> tris;
  for (const auto& f : cert.fragments) {
    const auto& side = assignment[static_cast<std::size_t>(f.variable)] ? f.white : f.black;
    tris.insert(tris.end(), side.begin(), side.end());
  }
  for (const auto& triple : cert.triples) {
    const auto& first = cert.gadgets[static_cast<std::size_t>(triple[0])];
    const auto& gadget = synth_equation_gadget(first.kind);
    int mask = 0;
    for (int i = 0; i < 3; ++i) {
      int value = assignment[static_cast<std::size_t>(first.variable[static_cast<std::size_t>(i)])];
      if (value != (first.negated[static_cast<std::size_t>(i)] ? 1 : 0)) mask |= 1 << i;
    }
    for (int gi : triple) {
      const auto& gc = cert.gadgets[static_cast<std::size_t>(gi)];
      for (const auto& t : gadget.canonical[static_cast<std::size_t>(mask)]) {
        tris.push_back({gc.nodes[static_cast<std::size_t>(t[0])], gc.nodes[static_cast<std::size_t>(t[1])],
                        gc.nodes[static_cast<std::size_t>(t[2])]});
      }
    }
    for (int s : gadget.free_self_sufficient[static_cast<std::size_t>(mask)]) {
      Triangle t{};
      for (int c = 0; c < 3; ++c)
        t[static_cast<std::size_t>(c)] = cert.gadgets[static_cast<std::size_t>(triple[static_cast<std::size_t>(c)])]
                                             .nodes[static_cast<std::size_t>(s)];
      tris.push_back(t);
    }
  }
  return detail::triangles_to_packing(std::move(tris));
}

/// Per-variable majority over contact triangles: a contact agrees with white
/// when a white contact triangle is taken or a black one is not. Ties go to white.
inline std::vector<int> packing_to_assignment(const PackingSolution& p, const Lin2TpCertificate& cert) {
  std::set<Triangle> chosen;
  for (const auto& m : p.members) {
    if (m.size() == 3) chosen.insert(detail::sorted_triangle({m[0], m[1], m[2]}));
  }
  std::vector<int> assignment(static_cast<std::size_t>(cert.variable_count), 0);
  for (const auto& f : cert.fragments) {
    int agree = 0;
    for (int i = 0; i < f.k; ++i) {
      if (chosen.count(detail::sorted_triangle(f.white[static_cast<std::size_t>(i)]))) ++agree;
      if (!chosen.count(detail::sorted_triangle(f.black[static_cast<std::size_t>(i)]))) ++agree;
    }
    assignment[static_cast<std::size_t>(f.variable)] = 2 * agree >= 2 * f.k ? 1 : 0;
  }
  return assignment;
}

inline PackingSolution normalize_packing(const PackingSolution& p, const Lin2TpCertificate& cert) {
  return lin2_solution_to_packing(packing_to_assignment(p, cert), cert);
}

/// Predicted size of T_sol when ℓ of the 2n equations are violated.
inline std::int64_t lin2_tsol_size(const Lin2TpCertificate& cert, int violated) {
  return (38LL * cert.equation_count - violated) * cert.m_s;
}

// ---------------------------------------------------------------------------
// Certificate JSON

inline Json to_json(const Lin2TpCertificate& c) {
  auto tri_json = [](const std::vector<Triangle>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(Json::array({t[0], t[1], t[2]}));
    return a;
  };
  Json gadgets = Json::array();
  for (const auto& g : c.gadgets) {
    gadgets.push_back(Json{{"kind", g.kind},
                           {"equation", g.equation},
                           {"form", g.form},
                           {"replica", g.replica},
                           {"copy", g.copy},
                           {"nodes", g.nodes},
                           {"variable", g.variable},
                           {"negated", g.negated}});
  }
  Json frags = Json::array();
  for (const auto& f : c.fragments) {
    frags.push_back(Json{{"variable", f.variable}, {"k", f.k}, {"white", tri_json(f.white)}, {"black", tri_json(f.black)}});
  }
  return Json{{"kind", "lin2-to-tp"},
              {"m", c.m},
              {"m_S", c.m_s},
              {"seed", c.seed},
              {"node_count", c.node_count},
              {"variable_count", c.variable_count},
              {"equation_count", c.equation_count},
              {"gadgets", gadgets},
              {"triples", c.triples},
              {"fragments", frags},
              {"warnings", c.warnings}};
}

inline Lin2TpCertificate lin2_certificate_from_json(const Json& j) {
  if (j.value("kind", "") != "lin2-to-tp") throw ParseError("not a lin2-to-tp certificate", 0);
  Lin2TpCertificate c;
  c.m = j.at("m").get<int>();
  c.m_s = j.at("m_S").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.node_count = j.at("node_count").get<int>();
  c.variable_count = j.at("variable_count").get<int>();
  c.equation_count = j.at("equation_count").get<int>();
  for (const auto& g : j.at("gadgets")) {
    GadgetCopy gc;
    gc.kind = g.at("kind").get<int>();
    gc.equation = g.at("equation").get<int>();
    gc.form = g.at("form").get<int>();
    gc.replica = g.at("replica").get<int>();
    gc.copy = g.at("copy").get<int>();
    gc.nodes = g.at("nodes").get<std::vector<int>>();
    gc.variable = g.at("variable").get<std::array<int, 3>>();
    gc.negated = g.at("negated").get<std::array<bool, 3>>();
    c.gadgets.push_back(std::move(gc));
  }
  c.triples = j.at("triples").get<std::vector<std::array<int, 3>>>();
  for (const auto& f : j.at("fragments")) {
    VariableFragment vf;
    vf.variable = f.at("variable").get<int>();
    vf.k = f.at("k").get<int>();
    vf.white = f.at("white").get<std::vector<Triangle>>();
    vf.black = f.at("black").get<std::vector<Triangle>>();
    c.fragments.push_back(std::move(vf));
  }
  c.warnings = j.at("warnings").get<std::vector<std::string>>();
  return c;
}

}  // namespace packcover
