#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packcover/core/io.hpp"
#include "packcover/core/types.hpp"

namespace packcover {

/// Points are the graph's vertices (ids 0..|V|-1) followed by one midpoint per
/// edge; every edge of the subdivision has length `radius`. Elements sit on
/// the midpoints and each set is the ball of that radius around its vertex.
struct MetricPresentation {
  Rational radius = 1;
  int point_count = 0;
  std::vector<int> element_point;             // element -> point
  std::vector<int> center_point;              // set -> point
  std::vector<std::vector<Rational>> distance;
  std::vector<std::vector<int>> balls;        // set -> elements within radius
};

struct IsToMpcResult {
  WeightedSetSystem system;
  int degree = 0;
  std::optional<MetricPresentation> metric;
};

inline int regular_degree(const Graph& g) {
  if (g.node_count() == 0) throw InvalidInput("graph is empty");
  int a = g.degree(0);
  for (int v = 1; v < g.node_count(); ++v) {
    if (g.degree(v) != a) throw InvalidInput("graph is not regular");
  }
  return a;
}

inline MetricPresentation subdivision_metric(const Graph& g, const Rational& radius) {
  MetricPresentation mp;
  mp.radius = radius;
  const int n = g.node_count();
  const int m = static_cast<int>(g.edge_count());
  mp.point_count = n + m;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + m));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
    adj[static_cast<std::size_t>(u)].push_back(n + e);
    adj[static_cast<std::size_t>(v)].push_back(n + e);
    adj[static_cast<std::size_t>(n + e)] = {u, v};
    mp.element_point.push_back(n + e);
  }
  for (int v = 0; v < n; ++v) mp.center_point.push_back(v);
  mp.distance.assign(static_cast<std::size_t>(n + m), std::vector<Rational>(static_cast<std::size_t>(n + m), Rational(-1)));
  for (int s = 0; s < n + m; ++s) {
    std::vector<int> hops(static_cast<std::size_t>(n + m), -1);
    std::deque<int> q{s};
    hops[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (hops[static_cast<std::size_t>(y)] < 0) {
          hops[static_cast<std::size_t>(y)] = hops[static_cast<std::size_t>(x)] + 1;
          q.push_back(y);
        }
      }
    }
    for (int t = 0; t < n + m; ++t) {
      int h = hops[static_cast<std::size_t>(t)];
      mp.distance[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = h < 0 ? Rational(-1) : radius * h;
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> ball;
    for (int e = 0; e < m; ++e) {
      const auto& d = mp.distance[static_cast<std::size_t>(v)][static_cast<std::size_t>(n + e)];
      if (d >= 0 && d <= radius) ball.push_back(e);
    }
    mp.balls.push_back(std::move(ball));
  }
  return mp;
}

/// Universe = edges, S_v = edges at v, unit element weights, set cost a - 1.
inline IsToMpcResult is_to_mpc(const Graph& g, bool metric = false, const Rational& radius = 1) {
  IsToMpcResult r;
  r.degree = regular_degree(g);
  if (r.degree < 2) throw InvalidInput("independent set reduction needs degree at least 2");
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.node_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    sets[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
    sets[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
  std::vector<Rational> costs(static_cast<std::size_t>(g.node_count()), Rational(r.degree - 1));
  r.system = WeightedSetSystem(static_cast<int>(g.edge_count()), std::move(sets), {}, std::move(costs));
  if (metric) {
    if (!(radius > 0)) throw InvalidInput("radius must be positive");
    r.metric = subdivision_metric(g, radius);
  }
  return r;
}

inline Json to_json(const MetricPresentation& mp) {
  Json dist = Json::array();
  for (const auto& row : mp.distance) {
    Json r = Json::array();
    for (const auto& d : row) r.push_back(d < 0 ? Json(nullptr) : rational_json(d));
    dist.push_back(r);
  }
  Json balls = Json::array();
  for (const auto& b : mp.balls) balls.push_back(detail::one_based(b));
  return Json{{"radius", rational_json(mp.radius)},
              {"point_count", mp.point_count},
              {"element_point", detail::one_based(mp.element_point)},
              {"center_point", detail::one_based(mp.center_point)},
              {"distance", dist},
              {"balls", balls}};
}

}  // namespace packcover
