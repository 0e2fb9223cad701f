#include "isacnet/regioncore.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

namespace isacnet {
namespace {

// Objective-comparison tolerance; capacities are desk-scale so this
// leaves several orders of margin over solver noise.
constexpr double kObjEps = 1e-7;

// Variable layout shared by P1 construction and witness extraction:
// comm variable e in [0, 2|U|) per directed edge, then two sensing
// variables per area link (forward, backward) in area_links() order.
int p1_variable_count(const ValidatedNetwork& net) {
  return static_cast<int>(net.edges().size()) + 2 * static_cast<int>(net.area_links().size());
}

int sense_var(const ValidatedNetwork& net, int area_position, int direction) {
  return static_cast<int>(net.edges().size()) + 2 * area_position + direction;
}

void add_conservation_rows(const ValidatedNetwork& net, LinearProgram& lp) {
  for (NodeId v = 1; v <= net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (net.out_edges(v).empty() && net.in_edges(v).empty()) continue;
    Constraint row;
    row.coeffs.assign(lp.variable_count, 0.0);
    for (int e : net.in_edges(v)) row.coeffs[e] += 1.0;
    for (int e : net.out_edges(v)) row.coeffs[e] -= 1.0;
    row.relation = Relation::Equal;
    row.rhs = 0.0;
    lp.constraints.push_back(std::move(row));
  }
}

// Boundary conventions: no communication into the source, none out of
// the sink. Encoded as f_e <= 0, which pins the non-negative variable
// without needing a phase-1 artificial.
void add_convention_rows(const ValidatedNetwork& net, LinearProgram& lp,
                         const std::vector<bool>& skip_link) {
  const auto& edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!skip_link.empty() && skip_link[edges[e].link]) continue;
    if (edges[e].to != net.source() && edges[e].from != net.sink()) continue;
    Constraint row;
    row.coeffs.assign(lp.variable_count, 0.0);
    row.coeffs[e] = 1.0;
    row.relation = Relation::LessEqual;
    row.rhs = 0.0;
    lp.constraints.push_back(std::move(row));
  }
}

void set_throughput_objective(const ValidatedNetwork& net, LinearProgram& lp) {
  lp.objective.assign(lp.variable_count, 0.0);
  for (int e : net.out_edges(net.source())) lp.objective[e] = 1.0;
}

ThroughputResult solve_p1(const ValidatedNetwork& net, double target_sensing) {
  LinearProgram lp = build_p1(net, target_sensing);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw InternalError("throughput program is not solvable at in-range sensing target " +
                        std::to_string(target_sensing));
  }

  ThroughputResult result;
  result.value = sol.objective_value;
  if (result.value < 0.0 && result.value > -kObjEps) result.value = 0.0;

  const auto& edges = net.edges();
  result.witness.comm.assign(edges.size(), 0.0);
  result.witness.sense.assign(edges.size(), 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    result.witness.comm[e] = sol.variable_values[e];
  }
  const auto& area = net.area_links();
  for (std::size_t p = 0; p < area.size(); ++p) {
    result.witness.sense[2 * area[p]] = sol.variable_values[sense_var(net, static_cast<int>(p), 0)];
    result.witness.sense[2 * area[p] + 1] =
        sol.variable_values[sense_var(net, static_cast<int>(p), 1)];
  }
  // Scrub solver noise: pinned edges exactly zero, sub-noise rates
  // dropped so downstream reductions subtract exact zeros.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].to == net.source() || edges[e].from == net.sink()) {
      result.witness.comm[e] = 0.0;
    }
    if (std::fabs(result.witness.comm[e]) <= 1e-12) result.witness.comm[e] = 0.0;
    if (std::fabs(result.witness.sense[e]) <= 1e-12) result.witness.sense[e] = 0.0;
  }
  return result;
}

double measured_slope(const SensingThroughputPoint& a, const SensingThroughputPoint& b) {
  // + 0.0 normalizes the -0.0 a flat piece produces.
  return (b.throughput - a.throughput) / (b.sensing - a.sensing) + 0.0;
}

std::optional<int> match_k(double slope, double slope_tol) {
  if (!(slope < -1e-12)) return std::nullopt;
  const double k_real = -1.0 / slope;
  const int k = static_cast<int>(std::lround(k_real));
  if (k >= 1 && std::fabs(slope + 1.0 / k) <= slope_tol) return k;
  return std::nullopt;
}

}  // namespace

LinearProgram build_p1(const ValidatedNetwork& net, double target_sensing) {
  const double s_star = max_sensing(net);
  const double tol = kObjEps * std::max(1.0, s_star);
  if (target_sensing < 0.0 || target_sensing > s_star + tol) {
    std::ostringstream msg;
    msg << "sensing target " << target_sensing << " outside [0, " << s_star << "]";
    throw ValidationError(msg.str());
  }
  const double pinned = std::min(target_sensing, s_star);

  LinearProgram lp;
  lp.variable_count = p1_variable_count(net);
  set_throughput_objective(net, lp);

  const auto& links = net.links();
  const auto& area = net.area_links();
  std::vector<int> area_position(links.size(), -1);
  for (std::size_t p = 0; p < area.size(); ++p) area_position[area[p]] = static_cast<int>(p);

  // Shared capacity per link, both rate kinds and both directions.
  for (std::size_t u = 0; u < links.size(); ++u) {
    Constraint row;
    row.coeffs.assign(lp.variable_count, 0.0);
    row.coeffs[2 * u] = 1.0;
    row.coeffs[2 * u + 1] = 1.0;
    if (area_position[u] >= 0) {
      row.coeffs[sense_var(net, area_position[u], 0)] = 1.0;
      row.coeffs[sense_var(net, area_position[u], 1)] = 1.0;
    }
    row.relation = Relation::LessEqual;
    row.rhs = links[u].capacity;
    lp.constraints.push_back(std::move(row));
  }

  add_conservation_rows(net, lp);
  add_convention_rows(net, lp, {});

  // Total sensing pinned to the target.
  Constraint total;
  total.coeffs.assign(lp.variable_count, 0.0);
  for (std::size_t p = 0; p < area.size(); ++p) {
    total.coeffs[sense_var(net, static_cast<int>(p), 0)] = 1.0;
    total.coeffs[sense_var(net, static_cast<int>(p), 1)] = 1.0;
  }
  total.relation = Relation::Equal;
  total.rhs = pinned;
  lp.constraints.push_back(std::move(total));

  return lp;
}

LinearProgram build_p2(const ValidatedNetwork& net) {
  LinearProgram lp;
  lp.variable_count = static_cast<int>(net.edges().size());
  set_throughput_objective(net, lp);

  const auto& links = net.links();
  std::vector<bool> in_area(links.size(), false);
  for (std::size_t u = 0; u < links.size(); ++u) {
    Constraint row;
    row.coeffs.assign(lp.variable_count, 0.0);
    row.coeffs[2 * u] = 1.0;
    row.coeffs[2 * u + 1] = 1.0;
    row.relation = Relation::LessEqual;
    if (net.link_in_area(static_cast<int>(u))) {
      // Fully sensing: no communication at all on this link.
      in_area[u] = true;
      row.rhs = 0.0;
    } else {
      row.rhs = links[u].capacity;
    }
    lp.constraints.push_back(std::move(row));
  }

  add_conservation_rows(net, lp);
  add_convention_rows(net, lp, in_area);
  return lp;
}

ThroughputResult max_throughput_at_sensing(const ValidatedNetwork& net, double target_sensing) {
  return solve_p1(net, target_sensing);
}

double max_sensing(const ValidatedNetwork& net) {
  double total = 0.0;
  for (int u : net.area_links()) total += net.links()[u].capacity;
  return total;
}

double max_throughput(const ValidatedNetwork& net) { return solve_p1(net, 0.0).value; }

ThroughputResult free_communication_witness(const ValidatedNetwork& net) {
  LinearProgram lp = build_p2(net);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw InternalError("restricted throughput program is not solvable");
  }

  ThroughputResult result;
  result.value = sol.objective_value;
  if (result.value < 0.0 && result.value > -kObjEps) result.value = 0.0;

  const auto& edges = net.edges();
  result.witness.comm.assign(edges.size(), 0.0);
  result.witness.sense.assign(edges.size(), 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double f = sol.variable_values[e];
    if (edges[e].to == net.source() || edges[e].from == net.sink()) f = 0.0;
    if (edges[e].link >= 0 && net.link_in_area(edges[e].link)) f = 0.0;
    if (std::fabs(f) <= 1e-12) f = 0.0;
    result.witness.comm[e] = f;
  }
  for (int u : net.area_links()) {
    result.witness.sense[2 * u] = net.links()[u].capacity;
  }
  return result;
}

double free_communication(const ValidatedNetwork& net) {
  return free_communication_witness(net).value;
}

bool has_avoiding_path(const ValidatedNetwork& net) {
  std::vector<bool> seen(net.node_count() + 1, false);
  std::queue<NodeId> queue;
  queue.push(net.source());
  seen[net.source()] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    if (v == net.sink()) return true;
    for (int e : net.out_edges(v)) {
      const DirectedEdge& edge = net.edges()[e];
      if (net.link_in_area(edge.link)) continue;
      if (net.links()[edge.link].capacity <= 0.0) continue;
      if (!seen[edge.to]) {
        seen[edge.to] = true;
        queue.push(edge.to);
      }
    }
  }
  return false;
}

FreeSensingResult approx_free_sensing(const ValidatedNetwork& net, double delta) {
  if (!(delta > 0.0)) {
    throw ValidationError("bisection tolerance delta must be positive");
  }
  const double s_star = max_sensing(net);
  if (s_star <= delta) {
    return {0.0, 0};  // interval already narrower than delta; v(0) = f* by definition
  }

  FreeSensingResult result;
  const double f_star = solve_p1(net, 0.0).value;
  ++result.lp_calls;
  // Accepting within half of the objective tolerance keeps the
  // reported level inside the v = f* plateau as judged by the same
  // deterministic solver that callers re-check with; kept absolute so
  // accepted points stay within kObjEps of f* at any problem scale.
  const double accept = 0.5 * kObjEps;

  double lower = 0.0;
  double upper = s_star;
  while (upper - lower > delta) {
    const double mid = 0.5 * (lower + upper);
    const double v = solve_p1(net, mid).value;
    ++result.lp_calls;
    if (v >= f_star - accept) {
      lower = mid;
    } else {
      upper = mid;
    }
  }
  result.value = lower;
  return result;
}

RegionBoundary trace_region(const ValidatedNetwork& net) {
  const double s_star = max_sensing(net);
  return trace_region(net, 1e-6, std::max(s_star * 1e-6, 1e-12));
}

RegionBoundary trace_region(const ValidatedNetwork& net, double slope_tol, double min_interval) {
  if (!(slope_tol > 0.0) || !(min_interval > 0.0)) {
    throw ValidationError("tracing tolerances must be positive");
  }

  RegionBoundary boundary;
  boundary.max_sensing = max_sensing(net);
  boundary.max_throughput = solve_p1(net, 0.0).value;

  if (boundary.max_sensing <= 0.0) {
    // Region collapses to the vertical extent at s = 0; its Pareto
    // boundary is the single corner point.
    boundary.free_communication = boundary.max_throughput;
    boundary.breakpoints.push_back({0.0, boundary.max_throughput});
    return boundary;
  }

  boundary.free_communication = solve_p1(net, boundary.max_sensing).value;

  if (boundary.max_throughput <= 0.0) {
    // No communication anywhere: one flat segment at f = 0.
    boundary.breakpoints.push_back({boundary.max_sensing, 0.0});
    boundary.breakpoints.push_back({0.0, 0.0});
    boundary.segments.push_back({boundary.breakpoints[0], boundary.breakpoints[1], 0.0, {}});
    return boundary;
  }

  // Subdivision: certified pieces in ascending sensing order plus the
  // intervals that never certified. The three-point collinearity test
  // is sound for a concave function: midpoint deviation d from the
  // chord bounds the whole interval's deviation by 2d.
  struct Piece {
    double s0, f0, s1, f1;
  };
  std::vector<Piece> pieces;
  std::vector<std::pair<double, double>> gaps;
  const double noise_floor = 1e-11 * std::max(1.0, boundary.max_throughput);

  struct Refiner {
    const ValidatedNetwork& net;
    double slope_tol;
    double min_interval;
    double noise_floor;
    std::vector<Piece>& pieces;
    std::vector<std::pair<double, double>>& gaps;

    void refine(double s0, double f0, double s1, double f1) {
      const double width = s1 - s0;
      if (width <= min_interval) {
        gaps.emplace_back(s0, s1);
        return;
      }
      const double mid = 0.5 * (s0 + s1);
      const double fm = solve_p1(net, mid).value;
      // |left slope - right slope| <= slope_tol, written without the
      // division.
      if (std::fabs(f0 + f1 - 2.0 * fm) <= 0.5 * slope_tol * width + noise_floor) {
        pieces.push_back({s0, f0, s1, f1});
        return;
      }
      refine(s0, f0, mid, fm);
      refine(mid, fm, s1, f1);
    }
  } refiner{net, slope_tol, min_interval, noise_floor, pieces, gaps};

  refiner.refine(0.0, boundary.max_throughput, boundary.max_sensing, boundary.free_communication);
  for (const auto& gap : gaps) {
    if (!boundary.unresolved.empty() && boundary.unresolved.back().second == gap.first) {
      boundary.unresolved.back().second = gap.second;
    } else {
      boundary.unresolved.push_back(gap);
    }
  }

  // Merge contiguous pieces whose slopes agree; a certified piece's
  // slope is within 2 * slope_tol of the true local slope, so twice
  // that margin separates same-segment noise from genuine kinks.
  struct Run {
    double s0, f0, s1, f1;
    double slope() const { return (f1 - f0) / (s1 - s0); }
  };
  std::vector<Run> runs;
  for (const Piece& piece : pieces) {
    const Run as_run{piece.s0, piece.f0, piece.s1, piece.f1};
    if (!runs.empty() && runs.back().s1 == piece.s0 &&
        std::fabs(runs.back().slope() - as_run.slope()) <= 4.0 * slope_tol) {
      runs.back().s1 = piece.s1;
      runs.back().f1 = piece.f1;
    } else {
      runs.push_back(as_run);
    }
  }

  if (runs.empty()) {
    // Everything fell below min_interval; report the chord.
    boundary.breakpoints.push_back({boundary.max_sensing, boundary.free_communication});
    boundary.breakpoints.push_back({0.0, boundary.max_throughput});
    BoundarySegment seg;
    seg.start = boundary.breakpoints[0];
    seg.end = boundary.breakpoints[1];
    seg.slope = measured_slope(seg.start, seg.end);
    seg.k = match_k(seg.slope, slope_tol);
    boundary.segments.push_back(seg);
    return boundary;
  }

  // Corner points in ascending sensing order. Where two runs meet at
  // a shared endpoint the corner is that point; across an uncertified
  // gap it is the intersection of the flanking lines whenever that
  // lands inside the gap, else both gap endpoints survive as corners.
  std::vector<SensingThroughputPoint> corners;
  corners.push_back({runs.front().s0, runs.front().f0});
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const Run& left = runs[i];
    const Run& right = runs[i + 1];
    if (left.s1 == right.s0) {
      corners.push_back({left.s1, left.f1});
      continue;
    }
    const double denominator = left.slope() - right.slope();
    if (denominator != 0.0) {
      // Lines through each run's endpoints.
      const double sx = (right.f0 - left.f1 + left.slope() * left.s1 - right.slope() * right.s0) /
                        denominator;
      if (sx >= left.s1 - min_interval && sx <= right.s0 + min_interval) {
        corners.push_back({sx, left.f1 + left.slope() * (sx - left.s1)});
        continue;
      }
    }
    corners.push_back({left.s1, left.f1});
    corners.push_back({right.s0, right.f0});
  }
  corners.push_back({runs.back().s1, runs.back().f1});

  // The published orientation runs from maximum sensing toward
  // maximum throughput.
  std::reverse(corners.begin(), corners.end());
  boundary.breakpoints = corners;
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    BoundarySegment seg;
    seg.start = corners[i];
    seg.end = corners[i + 1];
    seg.slope = measured_slope(seg.start, seg.end);
    seg.k = match_k(seg.slope, slope_tol);
    boundary.segments.push_back(seg);
  }
  return boundary;
}

std::vector<std::string> validity_violations(const RateAssignment& assign,
                                             const ValidatedNetwork& net, double eps) {
  const auto& edges = net.edges();
  if (assign.comm.size() != edges.size() || assign.sense.size() != edges.size()) {
    throw Error("assignment does not cover the network's directed links");
  }

  std::vector<std::string> violations;
  auto describe = [](const char* what, NodeId a, NodeId b, double value) {
    std::ostringstream msg;
    msg << what << " (" << a << "," << b << "): " << value;
    return msg.str();
  };

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (assign.comm[e] < -eps) {
      violations.push_back(
          describe("negative communication rate on", edges[e].from, edges[e].to, assign.comm[e]));
    }
    if (assign.sense[e] < -eps) {
      violations.push_back(
          describe("negative sensing rate on", edges[e].from, edges[e].to, assign.sense[e]));
    }
    if (edges[e].to == net.source() && std::fabs(assign.comm[e]) > eps) {
      violations.push_back(
          describe("communication into the source on", edges[e].from, edges[e].to, assign.comm[e]));
    }
    if (edges[e].from == net.sink() && std::fabs(assign.comm[e]) > eps) {
      violations.push_back(
          describe("communication out of the sink on", edges[e].from, edges[e].to, assign.comm[e]));
    }
  }

  const auto& links = net.links();
  for (std::size_t u = 0; u < links.size(); ++u) {
    const double used =
        assign.comm[2 * u] + assign.comm[2 * u + 1] + assign.sense[2 * u] + assign.sense[2 * u + 1];
    if (used > links[u].capacity + eps * std::max(1.0, links[u].capacity)) {
      std::ostringstream msg;
      msg << "link {" << links[u].a << "," << links[u].b << "}: total rate " << used
          << " exceeds capacity " << links[u].capacity;
      violations.push_back(msg.str());
    }
  }

  for (NodeId v = 1; v <= net.node_count(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    double balance = 0.0;
    double magnitude = 0.0;
    for (int e : net.in_edges(v)) {
      balance += assign.comm[e];
      magnitude += std::fabs(assign.comm[e]);
    }
    for (int e : net.out_edges(v)) {
      balance -= assign.comm[e];
      magnitude += std::fabs(assign.comm[e]);
    }
    if (std::fabs(balance) > eps * std::max(1.0, magnitude)) {
      std::ostringstream msg;
      msg << "node " << v << ": communication imbalance " << balance;
      violations.push_back(msg.str());
    }
  }
  return violations;
}

bool check_validity(const RateAssignment& assign, const ValidatedNetwork& net, double eps) {
  return validity_violations(assign, net, eps).empty();
}

SensingThroughputPoint evaluate_point(const RateAssignment& assign, const ValidatedNetwork& net) {
  std::vector<std::string> violations = validity_violations(assign, net);
  if (!violations.empty()) {
    throw ValidationError("invalid assignment: " + violations.front());
  }

  SensingThroughputPoint point;
  // Group each link's two directions before accumulating so that the
  // one-direction reduction, which moves one addend into the other,
  // produces a bit-identical total.
  for (int u : net.area_links()) {
    point.sensing += assign.sense[2 * u] + assign.sense[2 * u + 1];
  }
  for (int e : net.out_edges(net.source())) {
    point.throughput += assign.comm[e];
  }
  return point;
}

RateAssignment reduce_one_direction(const RateAssignment& assign, const ValidatedNetwork& net) {
  const auto& edges = net.edges();
  if (assign.comm.size() != edges.size() || assign.sense.size() != edges.size()) {
    throw Error("assignment does not cover the network's directed links");
  }
  RateAssignment reduced;
  reduced.comm.assign(edges.size(), 0.0);
  reduced.sense.assign(edges.size(), 0.0);
  for (std::size_t u = 0; u < net.links().size(); ++u) {
    const int forward = static_cast<int>(2 * u);
    const int backward = forward + 1;
    const double sense_total = assign.sense[forward] + assign.sense[backward];
    if (assign.comm[forward] >= assign.comm[backward]) {
      reduced.comm[forward] = assign.comm[forward] - assign.comm[backward];
      reduced.sense[forward] = sense_total;
    } else {
      reduced.comm[backward] = assign.comm[backward] - assign.comm[forward];
      reduced.sense[backward] = sense_total;
    }
  }
  return reduced;
}

}  // namespace isacnet
