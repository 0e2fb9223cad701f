#include "isacnet/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace isacnet {
namespace {

// Residual capacities live directly on the directed-edge indexing of
// ValidatedNetwork: edge 2u and edge 2u+1 are mutual reverses, both
// starting at the link capacity. Pushing x along one lowers its
// residual and raises the reverse's, so opposing traffic cancels and
// the per-link shared budget is respected by |net flow| <= capacity.
int reverse_edge(int e) { return e ^ 1; }

}  // namespace

FlowResult max_flow(const ValidatedNetwork& net) {
  return max_flow(net, std::vector<bool>(net.links().size(), false));
}

FlowResult max_flow(const ValidatedNetwork& net, const std::vector<bool>& blocked_links) {
  const auto& edges = net.edges();
  const int n = net.node_count();
  std::vector<double> residual(edges.size(), 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const UndirectedLink& link = net.links()[edges[e].link];
    const bool blocked =
        edges[e].link < static_cast<int>(blocked_links.size()) && blocked_links[edges[e].link];
    residual[e] = blocked ? 0.0 : link.capacity;
  }

  std::vector<int> parent_edge(n + 1);
  std::vector<bool> seen(n + 1);

  // Shortest augmenting paths; neighbor order is fixed (ascending
  // opposite node id) so results are deterministic.
  auto bfs = [&]() -> bool {
    std::fill(seen.begin(), seen.end(), false);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::queue<NodeId> queue;
    queue.push(net.source());
    seen[net.source()] = true;
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop();
      for (int e : net.out_edges(v)) {
        if (residual[e] <= 0.0) continue;
        const NodeId w = edges[e].to;
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        if (w == net.sink()) return true;
        queue.push(w);
      }
    }
    return false;
  };

  double value = 0.0;
  while (bfs()) {
    double push = std::numeric_limits<double>::infinity();
    for (NodeId v = net.sink(); v != net.source(); v = edges[parent_edge[v]].from) {
      push = std::min(push, residual[parent_edge[v]]);
    }
    for (NodeId v = net.sink(); v != net.source(); v = edges[parent_edge[v]].from) {
      const int e = parent_edge[v];
      residual[e] -= push;
      residual[reverse_edge(e)] += push;
    }
    value += push;
  }

  FlowResult result;
  result.value = value;
  result.flow.assign(edges.size(), 0.0);
  for (std::size_t u = 0; u < net.links().size(); ++u) {
    // Net flow along direction a->b; the symmetric start point makes
    // this a plain half-difference of the two residuals.
    const double net_forward = (residual[2 * u + 1] - residual[2 * u]) / 2.0;
    if (net_forward > 0.0) {
      result.flow[2 * u] = net_forward;
    } else if (net_forward < 0.0) {
      result.flow[2 * u + 1] = -net_forward;
    }
  }

  // Source side of the final residual graph; every link crossing it is
  // saturated toward the far side.
  std::vector<bool> side(n + 1, false);
  std::queue<NodeId> queue;
  queue.push(net.source());
  side[net.source()] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    for (int e : net.out_edges(v)) {
      if (residual[e] <= 0.0) continue;
      const NodeId w = edges[e].to;
      if (!side[w]) {
        side[w] = true;
        queue.push(w);
      }
    }
  }
  for (const UndirectedLink& link : net.links()) {
    if (side[link.a] != side[link.b]) {
      if (side[link.a]) {
        result.min_cut.emplace_back(link.a, link.b);
      } else {
        result.min_cut.emplace_back(link.b, link.a);
      }
    }
  }
  return result;
}

}  // namespace isacnet
