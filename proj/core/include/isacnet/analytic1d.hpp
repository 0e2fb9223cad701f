#pragma once

#include <optional>
#include <vector>

#include "isacnet/netmodel.hpp"
#include "isacnet/regioncore.hpp"

namespace isacnet {

/// A network recognized as the chain 1 - 2 - ... - K with source 1,
/// sink K, and a non-empty set of sensing links. capacities[j] is the
/// capacity of link {j+1, j+2}; in_area[j] says whether that link lies
/// inside the sensing area.
struct PathNetwork {
  std::vector<double> capacities;
  std::vector<bool> in_area;
  double c_min = 0.0;  // min over all links, the throughput ceiling

  int node_count() const { return static_cast<int>(capacities.size()) + 1; }
  int area_link_count() const;
  double area_capacity_sum() const;  // s*
};

/// Recognize the chain topology above. Returns nullopt when the link
/// set is not exactly {{j, j+1}}, the source is not node 1, the sink
/// is not node K, or no link lies in the sensing area (the closed-form
/// analysis needs at least one).
std::optional<PathNetwork> classify_path(const ValidatedNetwork& net);

/// Throughput ceiling of a chain: c_min, the bottleneck capacity.
double analytic_max_throughput(const PathNetwork& path);

/// Largest sensing compatible with throughput f on the chain:
///   s(f) = sum of area capacities - (number of area links) * f.
/// Throws ValidationError when f is outside [0, c_min].
double analytic_boundary(const PathNetwork& path, double throughput);

/// Closed-form boundary value at a given total sensing level,
///   v(s) = min(c_min, (s* - s) / m)   with m = number of area links,
/// for s in [0, s*].
double analytic_max_throughput_at_sensing(const PathNetwork& path, double target_sensing);

/// The sloped Pareto segment of the chain's region, built from the
/// closed form without any optimization: breakpoints (s*, 0) and
/// (s* - m * c_min, c_min), slope -1/m.
RegionBoundary analytic_region(const PathNetwork& path);

/// Whether full throughput coexists with positive sensing; on a chain
/// this happens exactly when some area link has capacity above c_min.
bool free_sensing_possible(const PathNetwork& path);

}  // namespace isacnet
