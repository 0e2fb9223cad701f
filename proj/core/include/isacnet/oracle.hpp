#pragma once

#include <vector>

#include "isacnet/netmodel.hpp"
#include "isacnet/regioncore.hpp"

namespace isacnet {

/// Exhaustive-search configuration. Capacities must be integer
/// multiples of `step`; enumeration walks every admissible split of
/// every link at that granularity.
struct GridSpec {
  double step = 1.0;
  int max_links = 5;  // refuse networks with more links than this
};

struct OraclePoint {
  SensingThroughputPoint point;
  RateAssignment witness;
};

/// Pareto frontier (max throughput per sensing level) by exhaustive
/// enumeration: per link, every (f, s) split of the capacity in steps
/// of grid.step with one active direction, over every orientation
/// choice. Every returned point carries a witness attaining it.
/// Throws ValidationError when the network exceeds grid.max_links,
/// capacities are off-grid, or the enumeration would exceed the hard
/// budget of 1e8 assignments (the message names the offending size).
std::vector<OraclePoint> brute_force_frontier(const ValidatedNetwork& net, const GridSpec& grid);

/// Projection of brute_force_frontier onto points only, sorted by
/// increasing sensing.
std::vector<SensingThroughputPoint> brute_force_boundary(const ValidatedNetwork& net,
                                                         const GridSpec& grid);

/// Max throughput over enumerated assignments whose sensing total
/// equals target_sensing (a grid multiple). Returns -1 when no
/// enumerated assignment hits that sensing level exactly.
double brute_force_max_f(const ValidatedNetwork& net, double target_sensing,
                         const GridSpec& grid);

}  // namespace isacnet
