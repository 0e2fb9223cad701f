#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isacnet/errors.hpp"

namespace isacnet {

/// Nodes are dense 1-based integers in [1, N].
using NodeId = int;

/// An undirected capacity-shared link between two distinct nodes.
/// The capacity is time-shared between the two directions and, on each
/// direction, between communication and sensing.
struct UndirectedLink {
  NodeId a = 0;
  NodeId b = 0;
  double capacity = 0.0;  // average bits per second, >= 0
};

/// Raw network description as read from a file or built programmatically.
/// Carries no derived data; see ValidatedNetwork.
struct NetworkSpec {
  int node_count = 0;
  std::vector<UndirectedLink> links;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<NodeId> sensing_area;  // subset of [1, node_count]
};

/// One direction of an undirected link. `link` indexes the owning
/// undirected link in ValidatedNetwork::links().
struct DirectedEdge {
  NodeId from = 0;
  NodeId to = 0;
  int link = -1;
};

/// A NetworkSpec whose invariants have been checked, with derived link
/// sets and adjacency indices. Immutable after construction; safe to
/// share across concurrent readers.
///
/// Indexing conventions used throughout the library:
///   - links() are normalized so a < b, sorted lexicographically.
///   - edges() has size 2*|U|: edge 2u is a->b of link u ("forward"),
///     edge 2u+1 is b->a ("backward").
///   - Per-directed-link rate vectors (RateAssignment, FlowResult) are
///     indexed by this edge index.
class ValidatedNetwork {
 public:
  /// Checks every NetworkSpec invariant and builds the derived indices.
  /// Throws ValidationError on the first violated invariant.
  static ValidatedNetwork validate(const NetworkSpec& spec);

  int node_count() const { return spec_.node_count; }
  NodeId source() const { return spec_.source; }
  NodeId sink() const { return spec_.sink; }

  /// Normalized undirected links (a < b, sorted).
  const std::vector<UndirectedLink>& links() const { return spec_.links; }
  /// Directed closure of links(); size 2*|U|.
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  /// Sorted, de-duplicated sensing area A.
  const std::vector<NodeId>& sensing_area() const { return spec_.sensing_area; }

  bool in_area(NodeId node) const;
  /// True iff both endpoints of link u lie in the sensing area.
  bool link_in_area(int link_index) const { return link_in_area_[static_cast<size_t>(link_index)]; }
  /// Indices of links with both endpoints in A, ascending.
  const std::vector<int>& area_links() const { return area_links_; }

  /// Edge indices leaving `node`, sorted by target node id.
  const std::vector<int>& out_edges(NodeId node) const;
  /// Edge indices entering `node`, sorted by source node id.
  const std::vector<int>& in_edges(NodeId node) const;
  /// Index of the directed edge from->to, or -1 if absent.
  int edge_index(NodeId from, NodeId to) const;

  /// The normalized spec (round-trips through serialization bit-exactly).
  const NetworkSpec& spec() const { return spec_; }

 private:
  ValidatedNetwork() = default;

  NetworkSpec spec_;
  std::vector<DirectedEdge> edges_;
  std::vector<bool> in_area_;        // indexed by node id
  std::vector<bool> link_in_area_;   // indexed by link index
  std::vector<int> area_links_;
  std::vector<std::vector<int>> out_edges_;  // indexed by node id
  std::vector<std::vector<int>> in_edges_;
};

/// Convenience wrapper matching the operation name.
inline ValidatedNetwork validate_network(const NetworkSpec& spec) {
  return ValidatedNetwork::validate(spec);
}

/// The link sets induced by the sensing area: U(A) holds the undirected
/// links with both endpoints in A, E(A) their directed closure.
struct SensingLinkSets {
  std::vector<UndirectedLink> u_a;
  std::vector<std::pair<NodeId, NodeId>> e_a;
  std::vector<int> link_indices;  // indices of u_a members into net.links()
};

SensingLinkSets sensing_link_sets(const ValidatedNetwork& net);

}  // namespace isacnet
