#include "isacnet/netmodel.hpp"

#include <algorithm>
#include <cmath>

namespace isacnet {

namespace {

std::string link_name(const UndirectedLink& link) {
  return "{" + std::to_string(link.a) + "," + std::to_string(link.b) + "}";
}

}  // namespace

ValidatedNetwork ValidatedNetwork::validate(const NetworkSpec& spec) {
  const int n = spec.node_count;
  if (n < 1) {
    throw ValidationError("node count must be at least 1, got " + std::to_string(n));
  }
  auto check_node = [n](NodeId id, const std::string& what) {
    if (id < 1 || id > n) {
      throw ValidationError(what + " node " + std::to_string(id) +
                            " out of range [1, " + std::to_string(n) + "]");
    }
  };
  check_node(spec.source, "source");
  check_node(spec.sink, "sink");
  if (spec.source == spec.sink) {
    throw ValidationError("source and sink must differ, both are " +
                          std::to_string(spec.source));
  }
  for (NodeId id : spec.sensing_area) {
    check_node(id, "sensing-area");
  }

  ValidatedNetwork net;
  net.spec_.node_count = n;
  net.spec_.source = spec.source;
  net.spec_.sink = spec.sink;

  net.spec_.sensing_area = spec.sensing_area;
  std::sort(net.spec_.sensing_area.begin(), net.spec_.sensing_area.end());
  net.spec_.sensing_area.erase(
      std::unique(net.spec_.sensing_area.begin(), net.spec_.sensing_area.end()),
      net.spec_.sensing_area.end());

  net.spec_.links.reserve(spec.links.size());
  for (const UndirectedLink& link : spec.links) {
    check_node(link.a, "link endpoint");
    check_node(link.b, "link endpoint");
    if (link.a == link.b) {
      throw ValidationError("self-loop at node " + std::to_string(link.a));
    }
    if (!(link.capacity >= 0.0) || !std::isfinite(link.capacity)) {
      throw ValidationError("link " + link_name(link) +
                            " has invalid capacity " + std::to_string(link.capacity) +
                            " (must be finite and >= 0)");
    }
    UndirectedLink normalized = link;
    if (normalized.a > normalized.b) std::swap(normalized.a, normalized.b);
    net.spec_.links.push_back(normalized);
  }
  std::sort(net.spec_.links.begin(), net.spec_.links.end(),
            [](const UndirectedLink& x, const UndirectedLink& y) {
              return std::pair{x.a, x.b} < std::pair{y.a, y.b};
            });
  for (size_t i = 1; i < net.spec_.links.size(); ++i) {
    const auto& prev = net.spec_.links[i - 1];
    const auto& cur = net.spec_.links[i];
    if (prev.a == cur.a && prev.b == cur.b) {
      throw ValidationError("duplicate link " + link_name(cur));
    }
  }

  net.in_area_.assign(static_cast<size_t>(n) + 1, false);
  for (NodeId id : net.spec_.sensing_area) net.in_area_[static_cast<size_t>(id)] = true;

  const int num_links = static_cast<int>(net.spec_.links.size());
  net.edges_.reserve(2 * static_cast<size_t>(num_links));
  net.link_in_area_.resize(static_cast<size_t>(num_links));
  net.out_edges_.assign(static_cast<size_t>(n) + 1, {});
  net.in_edges_.assign(static_cast<size_t>(n) + 1, {});
  for (int u = 0; u < num_links; ++u) {
    const UndirectedLink& link = net.spec_.links[static_cast<size_t>(u)];
    net.edges_.push_back({link.a, link.b, u});
    net.edges_.push_back({link.b, link.a, u});
    const bool in_area =
        net.in_area_[static_cast<size_t>(link.a)] && net.in_area_[static_cast<size_t>(link.b)];
    net.link_in_area_[static_cast<size_t>(u)] = in_area;
    if (in_area) net.area_links_.push_back(u);
    net.out_edges_[static_cast<size_t>(link.a)].push_back(2 * u);
    net.out_edges_[static_cast<size_t>(link.b)].push_back(2 * u + 1);
    net.in_edges_[static_cast<size_t>(link.b)].push_back(2 * u);
    net.in_edges_[static_cast<size_t>(link.a)].push_back(2 * u + 1);
  }
  // Link order already sorts each adjacency list by the opposite endpoint.
  for (int node = 1; node <= n; ++node) {
    auto& out = net.out_edges_[static_cast<size_t>(node)];
    std::sort(out.begin(), out.end(), [&net](int lhs, int rhs) {
      return net.edges_[static_cast<size_t>(lhs)].to < net.edges_[static_cast<size_t>(rhs)].to;
    });
    auto& in = net.in_edges_[static_cast<size_t>(node)];
    std::sort(in.begin(), in.end(), [&net](int lhs, int rhs) {
      return net.edges_[static_cast<size_t>(lhs)].from < net.edges_[static_cast<size_t>(rhs)].from;
    });
  }
  return net;
}

bool ValidatedNetwork::in_area(NodeId node) const {
  if (node < 1 || node >= static_cast<int>(in_area_.size())) return false;
  return in_area_[static_cast<size_t>(node)];
}

const std::vector<int>& ValidatedNetwork::out_edges(NodeId node) const {
  return out_edges_.at(static_cast<size_t>(node));
}

const std::vector<int>& ValidatedNetwork::in_edges(NodeId node) const {
  return in_edges_.at(static_cast<size_t>(node));
}

int ValidatedNetwork::edge_index(NodeId from, NodeId to) const {
  if (from < 1 || from >= static_cast<int>(out_edges_.size())) return -1;
  for (int e : out_edges_[static_cast<size_t>(from)]) {
    if (edges_[static_cast<size_t>(e)].to == to) return e;
  }
  return -1;
}

SensingLinkSets sensing_link_sets(const ValidatedNetwork& net) {
  SensingLinkSets sets;
  for (int u : net.area_links()) {
    const UndirectedLink& link = net.links()[static_cast<size_t>(u)];
    sets.u_a.push_back(link);
    sets.link_indices.push_back(u);
    sets.e_a.emplace_back(link.a, link.b);
    sets.e_a.emplace_back(link.b, link.a);
  }
  return sets;
}

}  // namespace isacnet
