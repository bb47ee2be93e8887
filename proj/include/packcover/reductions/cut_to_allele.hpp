#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"
#include "packcover/sibcheck.hpp"

namespace packcover {

/// One 2x3 connection grid: a-row from one gadget, b-row from the other,
/// rungs mu1..mu3 (mu2 is the centre). Entries are individual ids.
struct ConnectionGrid {
  int a12 = 0, a23 = 0, b12 = 0, b23 = 0;
  int mu1 = 0, mu2 = 0, mu3 = 0;
};

struct CutCertificate {
  int source_nodes = 0;  // 2n
  std::vector<std::pair<int, int>> source_edges;
  int individual_count = 0;
  int structure_nodes = 0;
  std::map<std::string, int> labels;  // label name -> allele id
  std::vector<std::string> role;      // per individual
  std::vector<Rational> potential;    // per individual
  std::vector<int> gadget_of;         // per individual, -1 for rungs
  // [node][0 = gray, 1 = white] -> groups of individual ids
  std::vector<std::array<std::vector<std::vector<int>>, 2>> squares;
  std::vector<std::array<std::vector<std::vector<int>>, 2>> triples;
  std::vector<std::array<ConnectionGrid, 2>> grids;  // per source edge
  // wrap edge plus one adjacent horizontal at each end, all four combinations
  std::vector<std::vector<int>> wrap_paths;
};

namespace detail {

struct CutBuilder {
  std::vector<std::vector<AllelePair>> rows;
  CutCertificate cert;
  int add(int p, int q, AllelePair label, const std::string& role, Rational pot, int gadget) {
    rows.push_back({AllelePair{p + 1, q + 1}, label});
    cert.role.push_back(role);
    cert.potential.push_back(pot);
    cert.gadget_of.push_back(gadget);
    return static_cast<int>(rows.size()) - 1;
  }
};

inline void require_cubic(const Graph& g) {
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) != 3) {
      throw InvalidInput("cut reduction needs a 3-regular graph; node " + std::to_string(v + 1) + " has degree " +
                         std::to_string(g.degree(v)));
    }
  }
}

}  // namespace detail

/// Each source node becomes a 3x12 grid with row rings and 3-rings on columns
/// 0, 4, 8; each source edge becomes two 2x3 grids joining a degree-3 group in
/// row 0 of one gadget to one in row 2 of the other. Individuals are the edges
/// of the resulting 4-regular structure (first locus) with a label (second locus).
inline std::pair<SibInstance, CutCertificate> cut_to_allele(const Graph& g) {
  detail::require_cubic(g);
  detail::CutBuilder b;
  auto& cert = b.cert;
  const int nodes = g.node_count();
  cert.source_nodes = nodes;
  cert.source_edges = g.edges();
  cert.structure_nodes = 36 * nodes;
  const int beta = 1, gamma = 2, lambda = 3, kappa = 4, mu = 5;
  cert.labels = {{"beta", beta}, {"gamma", gamma}, {"lambda", lambda}, {"kappa", kappa}, {"mu", mu}};
  auto alpha_of = [](int u) { return 6 + 2 * u; };
  auto delta_of = [](int u) { return 7 + 2 * u; };
  for (int u = 0; u < nodes; ++u) {
    cert.labels["alpha_" + std::to_string(u + 1)] = alpha_of(u);
    cert.labels["delta_" + std::to_string(u + 1)] = delta_of(u);
  }
  auto node_id = [](int u, int r, int c) { return 36 * u + 12 * r + ((c % 12) + 12) % 12; };
  const Rational quarter(1, 4), half(1, 2);

  // h[u][r][c]: (r,c)-(r,c+1); v[u][r][c]: (r,c)-(r+1,c); w[u][k]: column 4k ring closure
  std::vector<std::array<std::array<int, 12>, 3>> h(static_cast<std::size_t>(nodes));
  std::vector<std::array<std::array<int, 12>, 2>> v(static_cast<std::size_t>(nodes));
  std::vector<std::array<int, 3>> w(static_cast<std::size_t>(nodes));
  for (int u = 0; u < nodes; ++u) {
    const int al = alpha_of(u), de = delta_of(u);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 12; ++c) {
        int lab = 0;
        std::string name;
        switch (c % 4) {
          case 0: lab = de; name = "delta"; break;
          case 1: lab = beta; name = "beta"; break;
          case 2: lab = gamma; name = "gamma"; break;
          default: lab = al; name = "alpha"; break;
        }
        h[static_cast<std::size_t>(u)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            b.add(node_id(u, r, c), node_id(u, r, c + 1), {lab, lab}, "horizontal-" + name, quarter, u);
      }
    }
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 12; ++c) {
        int lab = r == 0 ? lambda : kappa;
        v[static_cast<std::size_t>(u)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            b.add(node_id(u, r, c), node_id(u, r + 1, c), {lab, lab}, r == 0 ? "vertical-lambda" : "vertical-kappa",
                  quarter, u);
      }
    }
    for (int k = 0; k < 3; ++k) {
      w[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)] =
          b.add(node_id(u, 2, 4 * k), node_id(u, 0, 4 * k), {al, de}, "wrap-alpha-delta", half, u);
    }
  }

  cert.squares.resize(static_cast<std::size_t>(nodes));
  cert.triples.resize(static_cast<std::size_t>(nodes));
  for (int u = 0; u < nodes; ++u) {
    auto U = static_cast<std::size_t>(u);
    for (int band = 0; band < 2; ++band) {
      for (int c = 0; c < 12; ++c) {
        auto B = static_cast<std::size_t>(band);
        auto C = static_cast<std::size_t>(c);
        std::vector<int> sq{h[U][B][C], h[U][B + 1][C], v[U][B][C], v[U][B][(C + 1) % 12]};
        std::sort(sq.begin(), sq.end());
        cert.squares[U][static_cast<std::size_t>((band + c) % 2)].push_back(std::move(sq));
      }
    }
    for (int k = 0; k < 3; ++k) {
      auto W = static_cast<std::size_t>(4 * k);
      auto before = static_cast<std::size_t>((4 * k + 11) % 12);
      std::vector<int> gray{h[U][0][before], w[U][static_cast<std::size_t>(k)], h[U][2][W]};
      std::vector<int> white{h[U][2][before], w[U][static_cast<std::size_t>(k)], h[U][0][W]};
      std::sort(gray.begin(), gray.end());
      std::sort(white.begin(), white.end());
      cert.triples[U][0].push_back(std::move(gray));
      cert.triples[U][1].push_back(std::move(white));
      for (auto top : {h[U][0][before], h[U][0][W]}) {
        for (auto bottom : {h[U][2][before], h[U][2][W]}) {
          std::vector<int> path{top, w[U][static_cast<std::size_t>(k)], bottom};
          std::sort(path.begin(), path.end());
          cert.wrap_paths.push_back(std::move(path));
        }
      }
    }
  }

  std::vector<int> next_block(static_cast<std::size_t>(nodes), 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [x, y] = g.edges()[e];
    int bx = next_block[static_cast<std::size_t>(x)]++;
    int by = next_block[static_cast<std::size_t>(y)]++;
    std::array<ConnectionGrid, 2> pair{};
    for (int side = 0; side < 2; ++side) {
      int ra = side == 0 ? 0 : 2;
      int rb = 2 - ra;
      ConnectionGrid cg;
      auto X = static_cast<std::size_t>(x), Y = static_cast<std::size_t>(y);
      cg.a12 = h[X][static_cast<std::size_t>(ra)][static_cast<std::size_t>(4 * bx + 1)];
      cg.a23 = h[X][static_cast<std::size_t>(ra)][static_cast<std::size_t>(4 * bx + 2)];
      cg.b12 = h[Y][static_cast<std::size_t>(rb)][static_cast<std::size_t>(4 * by + 1)];
      cg.b23 = h[Y][static_cast<std::size_t>(rb)][static_cast<std::size_t>(4 * by + 2)];
      int* rung[3] = {&cg.mu1, &cg.mu2, &cg.mu3};
      for (int i = 1; i <= 3; ++i) {
        *rung[i - 1] = b.add(node_id(x, ra, 4 * bx + i), node_id(y, rb, 4 * by + i), {mu, mu},
                             i == 2 ? "rung-mu-centre" : "rung-mu", i == 2 ? Rational(0) : half, -1);
      }
      pair[static_cast<std::size_t>(side)] = cg;
    }
    cert.grids.push_back(pair);
  }
  cert.individual_count = static_cast<int>(b.rows.size());
  SibInstance inst(std::move(b.rows), 2);
  return {std::move(inst), std::move(cert)};
}

/// Gray squares and triples for side 0, white for side 1, then per connection
/// grid a square plus a spare rung (paired across the two grids) when the
/// edge is cut, or a 3-path and a pair when it is not. 39n + c groups.
inline CoverSolution cut_solution_to_cover(const std::vector<int>& side, const CutCertificate& cert) {
  if (static_cast<int>(side.size()) != cert.source_nodes) throw InvalidInput("bipartition size mismatch");
  std::vector<std::vector<int>> groups;
  std::vector<char> covered(static_cast<std::size_t>(cert.individual_count), 0);
  auto take = [&](std::vector<int> grp) {
    for (int i : grp) covered[static_cast<std::size_t>(i)] = 1;
    std::sort(grp.begin(), grp.end());
    groups.push_back(std::move(grp));
  };
  for (int u = 0; u < cert.source_nodes; ++u) {
    auto s = static_cast<std::size_t>(side[static_cast<std::size_t>(u)] ? 1 : 0);
    for (const auto& sq : cert.squares[static_cast<std::size_t>(u)][s]) take(sq);
    for (const auto& t : cert.triples[static_cast<std::size_t>(u)][s]) take(t);
  }
  for (const auto& pair : cert.grids) {
    std::vector<int> spare;
    for (const auto& cg : pair) {
      auto open = [&](int i) { return !covered[static_cast<std::size_t>(i)]; };
      if (open(cg.a12) && open(cg.b12)) {
        take({cg.a12, cg.b12, cg.mu1, cg.mu2});
        spare.push_back(cg.mu3);
      } else if (open(cg.a23) && open(cg.b23)) {
        take({cg.a23, cg.b23, cg.mu2, cg.mu3});
        spare.push_back(cg.mu1);
      } else if (open(cg.a12) && open(cg.b23)) {
        take({cg.mu1, cg.a12, cg.mu2});
        take({cg.b23, cg.mu3});
      } else if (open(cg.a23) && open(cg.b12)) {
        take({cg.mu1, cg.b12, cg.mu2});
        take({cg.a23, cg.mu3});
      } else {
        throw Error("connection grid left in an unexpected state");
      }
    }
    for (std::size_t i = 0; i < spare.size(); i += 2) {
      if (i + 1 < spare.size()) {
        take({spare[i], spare[i + 1]});
      } else {
        take({spare[i]});
      }
    }
  }
  CoverSolution c;
  c.objective = static_cast<std::int64_t>(groups.size());
  c.groups = std::move(groups);
  return c;
}

/// Source edges with both ends on the same side.
inline int uncut_edges(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& side) {
  int c = 0;
  for (auto [u, v] : edges) c += side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)] ? 1 : 0;
  return c;
}

inline Rational group_potential(const CutCertificate& cert, const std::vector<int>& group) {
  Rational p = 0;
  for (int i : group) p += cert.potential[static_cast<std::size_t>(i)];
  return p;
}

/// Potential of the gadget of source node u plus half of each incident
/// connection's rungs.
inline Rational node_potential(const CutCertificate& cert, int u) {
  Rational p = 0;
  for (int i = 0; i < cert.individual_count; ++i) {
    if (cert.gadget_of[static_cast<std::size_t>(i)] == u) p += cert.potential[static_cast<std::size_t>(i)];
  }
  for (std::size_t e = 0; e < cert.grids.size(); ++e) {
    auto [x, y] = cert.source_edges[e];
    if (x != u && y != u) continue;
    for (const auto& cg : cert.grids[e]) {
      for (int r : {cg.mu1, cg.mu2, cg.mu3}) p += cert.potential[static_cast<std::size_t>(r)] / 2;
    }
  }
  return p;
}

struct CatalogueReport {
  std::size_t feasible_large = 0;  // feasible groups of size >= 3
  std::vector<std::vector<int>> unexpected;
  std::vector<std::vector<int>> over_potential;
  std::vector<std::vector<int>> infeasible_squares;
  Rational max_potential = 0;
  bool ok() const { return unexpected.empty() && over_potential.empty() && infeasible_squares.empty(); }
};

/// Allowed shapes: subsets of a gadget or connection square, and the paths
/// through a wrap edge.
inline std::vector<std::vector<int>> allowed_shapes(const CutCertificate& cert) {
  std::vector<std::vector<int>> out;
  for (std::size_t u = 0; u < cert.squares.size(); ++u) {
    for (int s = 0; s < 2; ++s) {
      for (const auto& sq : cert.squares[u][static_cast<std::size_t>(s)]) out.push_back(sq);
    }
  }
  out.insert(out.end(), cert.wrap_paths.begin(), cert.wrap_paths.end());
  for (const auto& pair : cert.grids) {
    for (const auto& cg : pair) {
      std::vector<int> l{cg.a12, cg.b12, cg.mu1, cg.mu2};
      std::vector<int> r{cg.a23, cg.b23, cg.mu2, cg.mu3};
      std::sort(l.begin(), l.end());
      std::sort(r.begin(), r.end());
      out.push_back(l);
      out.push_back(r);
    }
  }
  return out;
}

/// Enumerates feasible groups (2-allele condition) of size up to 4 among
/// `individuals` (all when empty) and classifies each one of size >= 3.
inline CatalogueReport cut_catalogue_check(const SibInstance& inst, const CutCertificate& cert,
                                           std::vector<int> individuals = {}) {
  if (individuals.empty()) {
    for (int i = 0; i < inst.size(); ++i) individuals.push_back(i);
  }
  auto shapes = allowed_shapes(cert);
  std::vector<std::set<int>> shape_sets;
  for (const auto& s : shapes) shape_sets.emplace_back(s.begin(), s.end());
  CatalogueReport rep;
  auto family = enumerate_closed_family(static_cast<int>(individuals.size()), 4, [&](const std::vector<int>& local) {
    std::vector<int> grp;
    for (int i : local) grp.push_back(individuals[static_cast<std::size_t>(i)]);
    return check_2allele(inst, grp);
  }, 1e12);
  for (const auto& local : family) {
    std::vector<int> grp;
    for (int i : local) grp.push_back(individuals[static_cast<std::size_t>(i)]);
    std::sort(grp.begin(), grp.end());
    Rational p = group_potential(cert, grp);
    if (p > rep.max_potential) rep.max_potential = p;
    if (p > 1) rep.over_potential.push_back(grp);
    if (grp.size() < 3) continue;
    ++rep.feasible_large;
    bool inside = std::any_of(shape_sets.begin(), shape_sets.end(), [&](const std::set<int>& s) {
      return std::all_of(grp.begin(), grp.end(), [&](int i) { return s.count(i) > 0; });
    });
    if (!inside) rep.unexpected.push_back(grp);
  }
  std::set<int> pool(individuals.begin(), individuals.end());
  for (const auto& s : shapes) {
    if (s.size() != 4) continue;
    if (!std::all_of(s.begin(), s.end(), [&](int i) { return pool.count(i) > 0; })) continue;
    if (!check_2allele(inst, s)) rep.infeasible_squares.push_back(s);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Certificate JSON

inline Json to_json(const CutCertificate& c) {
  auto groups_json = [](const std::vector<std::vector<int>>& gs) {
    Json a = Json::array();
    for (const auto& g : gs) a.push_back(g);
    return a;
  };
  Json pots = Json::array();
  for (const auto& p : c.potential) pots.push_back(rational_json(p));
  Json squares = Json::array(), triples = Json::array(), grids = Json::array();
  for (std::size_t u = 0; u < c.squares.size(); ++u) {
    squares.push_back(Json::array({groups_json(c.squares[u][0]), groups_json(c.squares[u][1])}));
    triples.push_back(Json::array({groups_json(c.triples[u][0]), groups_json(c.triples[u][1])}));
  }
  for (const auto& pair : c.grids) {
    Json p = Json::array();
    for (const auto& cg : pair) p.push_back(Json::array({cg.a12, cg.a23, cg.b12, cg.b23, cg.mu1, cg.mu2, cg.mu3}));
    grids.push_back(p);
  }
  Json edges = Json::array();
  for (auto [u, v] : c.source_edges) edges.push_back(Json::array({u, v}));
  return Json{{"kind", "cut-to-allele"},
              {"source_nodes", c.source_nodes},
              {"source_edges", edges},
              {"individual_count", c.individual_count},
              {"structure_nodes", c.structure_nodes},
              {"labels", c.labels},
              {"role", c.role},
              {"potential", pots},
              {"gadget_of", c.gadget_of},
              {"squares", squares},
              {"triples", triples},
              {"grids", grids},
              {"wrap_paths", c.wrap_paths}};
}

inline CutCertificate cut_certificate_from_json(const Json& j) {
  if (j.value("kind", "") != "cut-to-allele") throw ParseError("not a cut-to-allele certificate", 0);
  CutCertificate c;
  c.source_nodes = j.at("source_nodes").get<int>();
  for (const auto& e : j.at("source_edges")) c.source_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  c.individual_count = j.at("individual_count").get<int>();
  c.structure_nodes = j.at("structure_nodes").get<int>();
  c.labels = j.at("labels").get<std::map<std::string, int>>();
  c.role = j.at("role").get<std::vector<std::string>>();
  for (const auto& p : j.at("potential")) c.potential.push_back(rational_from_json(p));
  c.gadget_of = j.at("gadget_of").get<std::vector<int>>();
  for (const auto& s : j.at("squares")) {
    c.squares.push_back({s.at(0).get<std::vector<std::vector<int>>>(), s.at(1).get<std::vector<std::vector<int>>>()});
  }
  for (const auto& s : j.at("triples")) {
    c.triples.push_back({s.at(0).get<std::vector<std::vector<int>>>(), s.at(1).get<std::vector<std::vector<int>>>()});
  }
  for (const auto& p : j.at("grids")) {
    std::array<ConnectionGrid, 2> pair{};
    for (std::size_t i = 0; i < 2; ++i) {
      auto v = p.at(i).get<std::vector<int>>();
      pair[i] = {v.at(0), v.at(1), v.at(2), v.at(3), v.at(4), v.at(5), v.at(6)};
    }
    c.grids.push_back(pair);
  }
  c.wrap_paths = j.at("wrap_paths").get<std::vector<std::vector<int>>>();
  return c;
}

}  // namespace packcover
