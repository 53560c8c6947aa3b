#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "lipfree/error.hpp"

namespace lipfree {

struct TransportArc {
  std::size_t source = 0;
  std::size_t sink = 0;
  double amount = 0.0;
};

struct TransportPlan {
  double cost = 0.0;
  std::vector<TransportArc> arcs;  // sorted by (source, sink)
};

// Minimum-cost transport of the signed mass vector `net` (net export per
// node, summing to ~0) over the complete bipartite graph between exporters
// and importers, with arc costs dist[i][j]. Successive shortest augmenting
// paths with node potentials: Dijkstra runs on reduced costs, which stay
// nonnegative after each potential update, and ties break toward the lowest
// node index so plans are reproducible.
inline TransportPlan min_cost_transport(const std::vector<double>& net,
                                        const std::vector<std::vector<double>>& dist) {
  const std::size_t n = net.size();
  double scale = 1.0;
  for (double v : net) scale = std::max(scale, std::abs(v));
  const double mass_eps = 1e-13 * scale;

  std::vector<std::size_t> sources, sinks;
  for (std::size_t i = 0; i < n; ++i) {
    if (net[i] > mass_eps) sources.push_back(i);
    else if (net[i] < -mass_eps) sinks.push_back(i);
  }
  TransportPlan plan;
  if (sources.empty() || sinks.empty()) return plan;

  const std::size_t ns = sources.size(), nt = sinks.size();
  std::vector<double> supply(ns), demand(nt);
  for (std::size_t a = 0; a < ns; ++a) supply[a] = net[sources[a]];
  for (std::size_t b = 0; b < nt; ++b) demand[b] = -net[sinks[b]];
  std::vector<double> cost(ns * nt);
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < nt; ++b) cost[a * nt + b] = dist[sources[a]][sinks[b]];

  std::vector<double> flow(ns * nt, 0.0);
  // Node ids: 0..ns-1 exporters, ns..ns+nt-1 importers.
  const std::size_t nodes = ns + nt;
  std::vector<double> potential(nodes, 0.0);
  const double inf = std::numeric_limits<double>::infinity();

  std::size_t guard = 4 * nodes * nodes + 16;
  while (true) {
    if (guard-- == 0) throw Error(Errc::solver_failure, "augmentation limit exceeded");
    bool live_source = std::any_of(supply.begin(), supply.end(),
                                   [&](double s) { return s > mass_eps; });
    bool live_sink = std::any_of(demand.begin(), demand.end(),
                                 [&](double t) { return t > mass_eps; });
    if (!live_source || !live_sink) break;

    std::vector<double> d(nodes, inf);
    std::vector<std::size_t> parent(nodes, nodes);
    std::vector<bool> done(nodes, false);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (std::size_t a = 0; a < ns; ++a)
      if (supply[a] > mass_eps) {
        d[a] = 0.0;
        queue.push({0.0, a});
      }
    while (!queue.empty()) {
      auto [du, u] = queue.top();
      queue.pop();
      if (done[u] || du > d[u]) continue;
      done[u] = true;
      if (u < ns) {
        for (std::size_t b = 0; b < nt; ++b) {
          double w = cost[u * nt + b] + potential[u] - potential[ns + b];
          if (d[u] + w < d[ns + b] - 1e-15) {
            d[ns + b] = d[u] + w;
            parent[ns + b] = u;
            queue.push({d[ns + b], ns + b});
          }
        }
      } else {
        std::size_t b = u - ns;
        for (std::size_t a = 0; a < ns; ++a) {
          if (flow[a * nt + b] <= mass_eps) continue;
          double w = -cost[a * nt + b] + potential[u] - potential[a];
          if (d[u] + w < d[a] - 1e-15) {
            d[a] = d[u] + w;
            parent[a] = u;
            queue.push({d[a], a});
          }
        }
      }
    }

    std::size_t target = nodes;
    for (std::size_t b = 0; b < nt; ++b)
      if (demand[b] > mass_eps && d[ns + b] < inf &&
          (target == nodes || d[ns + b] < d[target] - 1e-15))
        target = ns + b;
    if (target == nodes) throw Error(Errc::solver_failure, "no augmenting path");

    // Bottleneck along the path, then push.
    double amount = demand[target - ns];
    std::size_t node = target;
    while (parent[node] != nodes) {
      std::size_t prev = parent[node];
      if (node >= ns)
        ;  // forward arc prev -> node, unlimited
      else
        amount = std::min(amount, flow[node * nt + (prev - ns)]);
      node = prev;
    }
    amount = std::min(amount, supply[node]);

    node = target;
    while (parent[node] != nodes) {
      std::size_t prev = parent[node];
      if (node >= ns)
        flow[prev * nt + (node - ns)] += amount;
      else
        flow[node * nt + (prev - ns)] -= amount;
      node = prev;
    }
    supply[node] -= amount;
    demand[target - ns] -= amount;

    for (std::size_t u = 0; u < nodes; ++u)
      if (d[u] < inf) potential[u] += d[u];
  }

  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < nt; ++b)
      if (flow[a * nt + b] > mass_eps) {
        plan.arcs.push_back({sources[a], sinks[b], flow[a * nt + b]});
        plan.cost += flow[a * nt + b] * cost[a * nt + b];
      }
  std::sort(plan.arcs.begin(), plan.arcs.end(), [](const TransportArc& x, const TransportArc& y) {
    return x.source != y.source ? x.source < y.source : x.sink < y.sink;
  });
  return plan;
}

}  // namespace lipfree
