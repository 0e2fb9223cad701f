#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isacnet/netmodel.hpp"
#include "isacnet/simplex.hpp"

namespace isacnet {

/// Per-edge communication and sensing rates, indexed like
/// ValidatedNetwork::edges(): entries 2u and 2u+1 are the two
/// directions of link u.
struct RateAssignment {
  std::vector<double> comm;
  std::vector<double> sense;
};

struct SensingThroughputPoint {
  double sensing = 0.0;
  double throughput = 0.0;
};

/// One maximal linear piece of the boundary, oriented from the
/// higher-sensing end to the lower-sensing end. Slope is the change
/// in throughput per unit of sensing; k is the matching positive
/// integer when the slope is -1/k within slope_tol, otherwise unset.
struct BoundarySegment {
  SensingThroughputPoint start;
  SensingThroughputPoint end;
  double slope = 0.0;
  std::optional<int> k;
};

struct RegionBoundary {
  double max_throughput = 0.0;      // f*, at zero sensing
  double max_sensing = 0.0;         // s*, at whatever throughput remains
  double free_communication = 0.0;  // f~, throughput at s = s*
  // Corner points of the piecewise-linear upper boundary, ordered by
  // increasing throughput (equivalently decreasing sensing); segment i
  // joins breakpoints[i] to breakpoints[i + 1].
  std::vector<SensingThroughputPoint> breakpoints;
  std::vector<BoundarySegment> segments;
  // Sensing intervals the tracer could not certify as linear; each is
  // narrower than min_interval and brackets a kink whose exact
  // location was recovered by intersecting the flanking segments.
  std::vector<std::pair<double, double>> unresolved;
};

struct ThroughputResult {
  double value = 0.0;
  RateAssignment witness;
};

struct FreeSensingResult {
  double value = 0.0;  // s~ approximation; never above the true value
  int lp_calls = 0;
};

/// Throughput maximization with total sensing pinned to target_sensing.
/// Variables are per-direction (f, s) pairs; sensing variables exist
/// only on links inside the sensing area. Throws ValidationError when
/// target_sensing is outside [0, s*] (a small tolerance above s* is
/// accepted and clamped).
LinearProgram build_p1(const ValidatedNetwork& net, double target_sensing);

/// Throughput maximization with the sensing area unusable for
/// communication: zero flow on area links, capacity rows only on the
/// links outside the area.
LinearProgram build_p2(const ValidatedNetwork& net);

/// v(T_S): max throughput at exactly target_sensing total sensing,
/// with a witness assignment attaining it.
ThroughputResult max_throughput_at_sensing(const ValidatedNetwork& net, double target_sensing);

/// s*: sum of the capacities of the links inside the sensing area.
/// Exact sum, no optimization involved.
double max_sensing(const ValidatedNetwork& net);

/// f*: v(0), max throughput with no sensing requirement; agrees with
/// the flow-based computation within objective tolerance.
double max_throughput(const ValidatedNetwork& net);

/// f~: max throughput while the sensing area senses at full rate,
/// the optimum of the restricted problem.
double free_communication(const ValidatedNetwork& net);

/// Witness-bearing variant of free_communication: rates from the
/// restricted problem plus full-capacity sensing on every area link.
ThroughputResult free_communication_witness(const ValidatedNetwork& net);

/// Whether a source->sink path over positive-capacity links exists
/// that avoids every sensing-area link; equivalent to f~ > 0.
bool has_avoiding_path(const ValidatedNetwork& net);

/// s~: largest sensing level at which throughput still equals f*,
/// found by L/U/M bisection on [0, s*]. The returned value satisfies
/// v(value) = f* and value >= s~ - delta, using at most
/// ceil(log2(s*/delta)) + 1 LP solves; when s* <= delta no LP runs.
FreeSensingResult approx_free_sensing(const ValidatedNetwork& net, double delta);

/// Trace the full boundary of the sensing-throughput region on
/// [0, s*] by recursive subdivision: an interval whose endpoint and
/// midpoint values are collinear within slope_tol is a certified
/// segment (concavity of v makes the three-point test sound);
/// otherwise it splits, down to min_interval. Certified pieces merge
/// into maximal segments and kink locations between them are
/// recovered exactly by intersecting the flanking lines.
RegionBoundary trace_region(const ValidatedNetwork& net, double slope_tol, double min_interval);

/// Defaults: slope_tol 1e-6, min_interval s* * 1e-6.
RegionBoundary trace_region(const ValidatedNetwork& net);

/// Whether an assignment satisfies every model constraint: shared
/// capacity per link, flow conservation at interior nodes,
/// non-negative rates, and the zero conventions on edges into the
/// source and out of the sink.
bool check_validity(const RateAssignment& assign, const ValidatedNetwork& net, double eps = 1e-7);

/// The violated-constraint descriptions behind check_validity; empty
/// when the assignment is valid.
std::vector<std::string> validity_violations(const RateAssignment& assign,
                                             const ValidatedNetwork& net, double eps = 1e-7);

/// Total sensing (over area links only) and throughput (net source
/// output) of a valid assignment. Sensing is accumulated per link as
/// the sum of its two directions, so one-direction reductions
/// evaluate bit-identically. Throws ValidationError on an invalid
/// assignment.
SensingThroughputPoint evaluate_point(const RateAssignment& assign, const ValidatedNetwork& net);

/// Rewrite an assignment so that on every link at most one direction
/// carries rate: opposing communication cancels (max - min stays on
/// the larger side) and sensing moves to the surviving direction.
/// Preserves throughput and total sensing exactly.
RateAssignment reduce_one_direction(const RateAssignment& assign, const ValidatedNetwork& net);

}  // namespace isacnet
