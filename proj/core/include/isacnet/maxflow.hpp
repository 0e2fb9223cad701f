#pragma once

#include <utility>
#include <vector>

#include "isacnet/netmodel.hpp"

namespace isacnet {

struct FlowResult {
  double value = 0.0;
  // Net flow per directed edge, indexed like ValidatedNetwork::edges().
  // At most one direction of each link carries positive flow.
  std::vector<double> flow;
  // Saturated links crossing the source side of the residual graph,
  // reported as (from, to) with `from` on the source side.
  std::vector<std::pair<NodeId, NodeId>> min_cut;
};

/// Edmonds-Karp max flow from source to sink. Each undirected link of
/// capacity c admits at most c of traffic in total across the two
/// directions; opposing flow cancels first, so per-direction bounds
/// are never the binding model here.
///
/// `blocked` (optional) marks link indices whose both directions carry
/// zero flow; used to restrict routing away from part of the network.
FlowResult max_flow(const ValidatedNetwork& net);
FlowResult max_flow(const ValidatedNetwork& net, const std::vector<bool>& blocked_links);

}  // namespace isacnet
