#include "isacnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "isacnet/analytic1d.hpp"

namespace isacnet {
namespace {

constexpr std::int64_t kBudget = 100000000;  // hard cap on enumerated assignments

struct LinkPlan {
  int units = 0;        // capacity in grid steps
  bool sensing = false;  // may carry sensing (inside the area)
  bool two_orientations = false;
};

// Search state: one (direction, f, s) choice per link, in grid units.
struct Enumerator {
  const ValidatedNetwork& net;
  double step;
  std::vector<LinkPlan> plans;
  std::vector<std::int64_t> balance;  // per node, net communication in units
  std::vector<int> direction;         // 0: a->b carries, 1: b->a carries
  std::vector<int> f_units;
  std::vector<int> s_units;
  // Best throughput per sensing level, with the first witness found.
  std::map<std::int64_t, std::pair<std::int64_t, RateAssignment>> best;

  explicit Enumerator(const ValidatedNetwork& n, double g) : net(n), step(g) {
    balance.assign(net.node_count() + 1, 0);
    direction.assign(net.links().size(), 0);
    f_units.assign(net.links().size(), 0);
    s_units.assign(net.links().size(), 0);
  }

  RateAssignment materialize() const {
    RateAssignment assign;
    assign.comm.assign(net.edges().size(), 0.0);
    assign.sense.assign(net.edges().size(), 0.0);
    for (std::size_t u = 0; u < plans.size(); ++u) {
      assign.comm[2 * u + direction[u]] = f_units[u] * step;
      assign.sense[2 * u] = s_units[u] * step;
    }
    return assign;
  }

  void record() {
    std::int64_t sensing = 0;
    std::int64_t throughput = 0;
    for (std::size_t u = 0; u < plans.size(); ++u) {
      sensing += s_units[u];
      const UndirectedLink& link = net.links()[u];
      const NodeId tail = direction[u] == 0 ? link.a : link.b;
      if (tail == net.source()) throughput += f_units[u];
    }
    auto it = best.find(sensing);
    if (it == best.end()) {
      best.emplace(sensing, std::make_pair(throughput, materialize()));
    } else if (throughput > it->second.first) {
      it->second = std::make_pair(throughput, materialize());
    }
  }

  void walk(std::size_t u) {
    if (u == plans.size()) {
      for (NodeId v = 1; v <= net.node_count(); ++v) {
        if (v == net.source() || v == net.sink()) continue;
        if (balance[v] != 0) return;
      }
      record();
      return;
    }
    const UndirectedLink& link = net.links()[u];
    const int orientations = plans[u].two_orientations ? 2 : 1;
    for (int d = 0; d < orientations; ++d) {
      const NodeId tail = d == 0 ? link.a : link.b;
      const NodeId head = d == 0 ? link.b : link.a;
      direction[u] = d;
      for (int f = 0; f <= plans[u].units; ++f) {
        // Boundary conventions: nothing flows into the source or out
        // of the sink.
        if (f > 0 && (head == net.source() || tail == net.sink())) break;
        // Duplicate orientation of a zero flow adds nothing.
        if (d == 1 && f == 0) continue;
        balance[tail] -= f;
        balance[head] += f;
        f_units[u] = f;
        const int sensing_room = plans[u].sensing ? plans[u].units - f : 0;
        for (int s = 0; s <= sensing_room; ++s) {
          s_units[u] = s;
          walk(u + 1);
        }
        balance[tail] += f;
        balance[head] -= f;
      }
    }
    direction[u] = 0;
    f_units[u] = 0;
    s_units[u] = 0;
  }
};

std::vector<LinkPlan> plan_links(const ValidatedNetwork& net, const GridSpec& grid) {
  if (!(grid.step > 0.0)) {
    throw ValidationError("grid step must be positive");
  }
  const auto& links = net.links();
  if (static_cast<int>(links.size()) > grid.max_links) {
    std::ostringstream msg;
    msg << "network has " << links.size() << " links; the oracle accepts at most "
        << grid.max_links;
    throw ValidationError(msg.str());
  }

  const bool chain = classify_path(net).has_value();
  std::vector<LinkPlan> plans(links.size());
  double enumerated = 1.0;
  for (std::size_t u = 0; u < links.size(); ++u) {
    const double exact_units = links[u].capacity / grid.step;
    const double rounded = std::round(exact_units);
    if (std::fabs(exact_units - rounded) > 1e-9 * std::max(1.0, exact_units)) {
      std::ostringstream msg;
      msg << "capacity " << links[u].capacity << " of link {" << links[u].a << ","
          << links[u].b << "} is not a multiple of grid step " << grid.step;
      throw ValidationError(msg.str());
    }
    plans[u].units = static_cast<int>(rounded);
    plans[u].sensing = net.link_in_area(static_cast<int>(u));
    plans[u].two_orientations = !chain;

    const double n = plans[u].units;
    double splits = plans[u].sensing ? (n + 1.0) * (n + 2.0) / 2.0 : n + 1.0;
    if (plans[u].two_orientations) splits *= 2.0;
    enumerated *= splits;
    if (enumerated > static_cast<double>(kBudget)) {
      std::ostringstream msg;
      msg << "enumeration of about " << enumerated << " assignments exceeds the budget of "
          << kBudget;
      throw ValidationError(msg.str());
    }
  }
  return plans;
}

Enumerator enumerate_all(const ValidatedNetwork& net, const GridSpec& grid) {
  Enumerator e(net, grid.step);
  e.plans = plan_links(net, grid);
  e.walk(0);
  return e;
}

}  // namespace

std::vector<OraclePoint> brute_force_frontier(const ValidatedNetwork& net, const GridSpec& grid) {
  Enumerator e = enumerate_all(net, grid);

  // Pareto filter: scanning from the highest sensing level down, a
  // point survives only if it strictly improves the throughput.
  std::vector<OraclePoint> frontier;
  std::int64_t best_throughput = -1;
  for (auto it = e.best.rbegin(); it != e.best.rend(); ++it) {
    if (it->second.first <= best_throughput) continue;
    best_throughput = it->second.first;
    OraclePoint point;
    point.point.sensing = it->first * grid.step;
    point.point.throughput = it->second.first * grid.step;
    point.witness = it->second.second;
    frontier.push_back(std::move(point));
  }
  std::reverse(frontier.begin(), frontier.end());

  for (const OraclePoint& point : frontier) {
    if (!check_validity(point.witness, net)) {
      throw InternalError("oracle produced an invalid witness");
    }
  }
  return frontier;
}

std::vector<SensingThroughputPoint> brute_force_boundary(const ValidatedNetwork& net,
                                                         const GridSpec& grid) {
  std::vector<SensingThroughputPoint> points;
  for (const OraclePoint& p : brute_force_frontier(net, grid)) {
    points.push_back(p.point);
  }
  return points;
}

double brute_force_max_f(const ValidatedNetwork& net, double target_sensing,
                         const GridSpec& grid) {
  const double exact_units = target_sensing / grid.step;
  const double rounded = std::round(exact_units);
  if (std::fabs(exact_units - rounded) > 1e-9 * std::max(1.0, std::fabs(exact_units))) {
    std::ostringstream msg;
    msg << "sensing target " << target_sensing << " is not a multiple of grid step " << grid.step;
    throw ValidationError(msg.str());
  }

  Enumerator e = enumerate_all(net, grid);
  auto it = e.best.find(static_cast<std::int64_t>(rounded));
  if (it == e.best.end()) return -1.0;
  return it->second.first * grid.step;
}

}  // namespace isacnet
