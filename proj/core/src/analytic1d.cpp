#include "isacnet/analytic1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isacnet {

int PathNetwork::area_link_count() const {
  return static_cast<int>(std::count(in_area.begin(), in_area.end(), true));
}

double PathNetwork::area_capacity_sum() const {
  double total = 0.0;
  for (std::size_t j = 0; j < capacities.size(); ++j) {
    if (in_area[j]) total += capacities[j];
  }
  return total;
}

std::optional<PathNetwork> classify_path(const ValidatedNetwork& net) {
  const int k = net.node_count();
  const auto& links = net.links();
  if (k < 2 || static_cast<int>(links.size()) != k - 1) return std::nullopt;
  if (net.source() != 1 || net.sink() != k) return std::nullopt;
  // Links are stored normalized and sorted, so the chain topology
  // means link j is exactly {j+1, j+2}.
  for (std::size_t j = 0; j < links.size(); ++j) {
    if (links[j].a != static_cast<NodeId>(j + 1) || links[j].b != static_cast<NodeId>(j + 2)) {
      return std::nullopt;
    }
  }
  if (net.area_links().empty()) return std::nullopt;

  PathNetwork path;
  path.capacities.reserve(links.size());
  path.in_area.reserve(links.size());
  double c_min = links.front().capacity;
  for (std::size_t j = 0; j < links.size(); ++j) {
    path.capacities.push_back(links[j].capacity);
    path.in_area.push_back(net.link_in_area(static_cast<int>(j)));
    c_min = std::min(c_min, links[j].capacity);
  }
  path.c_min = c_min;
  return path;
}

double analytic_max_throughput(const PathNetwork& path) { return path.c_min; }

double analytic_boundary(const PathNetwork& path, double throughput) {
  const double tol = 1e-9 * std::max(1.0, path.c_min);
  if (throughput < -tol || throughput > path.c_min + tol) {
    std::ostringstream msg;
    msg << "throughput " << throughput << " outside [0, " << path.c_min << "]";
    throw ValidationError(msg.str());
  }
  return path.area_capacity_sum() - path.area_link_count() * throughput;
}

double analytic_max_throughput_at_sensing(const PathNetwork& path, double target_sensing) {
  const double s_star = path.area_capacity_sum();
  const double tol = 1e-9 * std::max(1.0, s_star);
  if (target_sensing < -tol || target_sensing > s_star + tol) {
    std::ostringstream msg;
    msg << "sensing target " << target_sensing << " outside [0, " << s_star << "]";
    throw ValidationError(msg.str());
  }
  const double remaining = (s_star - target_sensing) / path.area_link_count();
  return std::max(0.0, std::min(path.c_min, remaining));
}

RegionBoundary analytic_region(const PathNetwork& path) {
  RegionBoundary boundary;
  boundary.max_throughput = path.c_min;
  boundary.max_sensing = path.area_capacity_sum();
  boundary.free_communication = 0.0;

  if (path.c_min <= 0.0) {
    // The region is the sensing axis alone.
    boundary.breakpoints.push_back({boundary.max_sensing, 0.0});
    return boundary;
  }

  const int m = path.area_link_count();
  boundary.breakpoints.push_back({boundary.max_sensing, 0.0});
  boundary.breakpoints.push_back({boundary.max_sensing - m * path.c_min, path.c_min});

  BoundarySegment segment;
  segment.start = boundary.breakpoints[0];
  segment.end = boundary.breakpoints[1];
  segment.slope = -1.0 / m;
  segment.k = m;
  boundary.segments.push_back(segment);
  return boundary;
}

bool free_sensing_possible(const PathNetwork& path) {
  for (std::size_t j = 0; j < path.capacities.size(); ++j) {
    if (path.in_area[j] && path.capacities[j] > path.c_min) return true;
  }
  return false;
}

}  // namespace isacnet
