#include "isacnet/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace isacnet {
namespace {

// Dense two-phase tableau. Columns: structural variables, then one
// slack/surplus per inequality, then one artificial per row that needs
// one. Row 0 of `rows` is constraint 1, etc.; objective rows are kept
// separately.
struct Tableau {
  int structural = 0;
  int slack = 0;
  int artificial = 0;
  std::vector<std::vector<double>> rows;  // m x (n_total + 1), last col rhs
  std::vector<int> basis;                 // column basic in each row
  std::vector<double> row_scale;          // max |coeff| per original row

  int total_columns() const { return structural + slack + artificial; }
};

void dump_tableau(const Tableau& t, const std::vector<double>& cost, const char* tag) {
  std::fprintf(stderr, "-- %s: %zu rows, %d cols --\n", tag, t.rows.size(), t.total_columns());
  std::fprintf(stderr, "   cost:");
  for (double c : cost) std::fprintf(stderr, " %.6g", c);
  std::fprintf(stderr, "\n");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::fprintf(stderr, "   [b=%d]", t.basis[r]);
    for (double v : t.rows[r]) std::fprintf(stderr, " %.6g", v);
    std::fprintf(stderr, "\n");
  }
}

// Reduced costs for the current basis, maximization convention:
// entering candidates have positive reduced cost.
std::vector<double> reduced_costs(const Tableau& t, const std::vector<double>& cost) {
  const int n = t.total_columns();
  std::vector<double> reduced(cost.begin(), cost.begin() + n);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double cb = cost[t.basis[r]];
    if (cb == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      reduced[j] -= cb * t.rows[r][j];
    }
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    reduced[t.basis[r]] = 0.0;  // exact, not left to cancellation
  }
  return reduced;
}

double objective_of_basis(const Tableau& t, const std::vector<double>& cost) {
  double z = 0.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    z += cost[t.basis[r]] * t.rows[r].back();
  }
  return z;
}

void pivot(Tableau& t, int row, int col) {
  std::vector<double>& prow = t.rows[row];
  const double p = prow[col];
  for (double& v : prow) v /= p;
  prow[col] = 1.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(r) == row) continue;
    const double factor = t.rows[r][col];
    if (factor == 0.0) continue;
    std::vector<double>& target = t.rows[r];
    for (std::size_t j = 0; j < target.size(); ++j) {
      target[j] -= factor * prow[j];
    }
    target[col] = 0.0;
  }
  t.basis[row] = col;
}

// Ratio test with Bland-compatible tie break: smallest ratio, then
// lowest basic column index. Returns -1 when the column is unbounded.
int leaving_row(const Tableau& t, int col, double pivot_tol) {
  int best = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double a = t.rows[r][col];
    if (a <= pivot_tol) continue;
    const double ratio = t.rows[r].back() / a;
    if (ratio < best_ratio - 1e-12 ||
        (ratio < best_ratio + 1e-12 && (best < 0 || t.basis[r] < t.basis[best]))) {
      best_ratio = ratio;
      best = static_cast<int>(r);
    }
  }
  return best;
}

enum class PhaseOutcome { Optimal, Unbounded };

// Run simplex iterations on `t` for the given cost until no entering
// column remains. `allowed` masks columns that may enter (artificials
// are barred from re-entering in phase 2).
PhaseOutcome run_phase(Tableau& t, const std::vector<double>& cost,
                       const std::vector<bool>& allowed, const SimplexOptions& opt,
                       const char* tag) {
  const int n = t.total_columns();
  const long iteration_cap = 50L * (n + static_cast<long>(t.rows.size()) + 10) *
                             (n + static_cast<long>(t.rows.size()) + 10);
  const long stall_limit = static_cast<long>(opt.stall_factor) *
                           std::max<long>(1, static_cast<long>(t.rows.size()));

  double last_objective = objective_of_basis(t, cost);
  long stall = 0;
  bool bland = false;

  for (long iter = 0; iter < iteration_cap; ++iter) {
    if (opt.log_tableaus) dump_tableau(t, cost, tag);
    std::vector<double> reduced = reduced_costs(t, cost);

    int entering = -1;
    if (bland) {
      for (int j = 0; j < n; ++j) {
        if (allowed[j] && reduced[j] > opt.pivot_tol) {
          entering = j;
          break;
        }
      }
    } else {
      double best = opt.pivot_tol;
      for (int j = 0; j < n; ++j) {
        if (allowed[j] && reduced[j] > best) {
          best = reduced[j];
          entering = j;
        }
      }
    }
    if (entering < 0) return PhaseOutcome::Optimal;

    const int leaving = leaving_row(t, entering, opt.pivot_tol);
    if (leaving < 0) return PhaseOutcome::Unbounded;

    pivot(t, leaving, entering);

    const double objective = objective_of_basis(t, cost);
    if (objective > last_objective + 1e-12) {
      stall = 0;
      bland = false;
    } else if (++stall > stall_limit) {
      bland = true;  // anti-cycling: Bland's rule terminates finitely
    }
    last_objective = objective;
  }
  throw InternalError("simplex iteration cap exceeded; solver cannot certify a result");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) { return solve_lp(lp, SimplexOptions{}); }

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opt) {
  if (lp.variable_count < 0) {
    throw Error("linear program has negative variable count");
  }
  if (static_cast<int>(lp.objective.size()) != lp.variable_count) {
    throw Error("objective length does not match variable count");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (static_cast<int>(lp.constraints[i].coeffs.size()) != lp.variable_count) {
      throw Error("constraint " + std::to_string(i) + " length does not match variable count");
    }
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw Error("objective contains a non-finite coefficient");
  }
  for (const Constraint& c : lp.constraints) {
    if (!std::isfinite(c.rhs)) throw Error("constraint rhs is non-finite");
    for (double v : c.coeffs) {
      if (!std::isfinite(v)) throw Error("constraint contains a non-finite coefficient");
    }
  }

  // Degenerate case: nothing to optimize, feasibility is just a scan
  // of constant constraints.
  if (lp.variable_count == 0) {
    for (const Constraint& c : lp.constraints) {
      const bool ok = c.relation == Relation::LessEqual    ? 0.0 <= c.rhs + opt.feasibility_eps
                      : c.relation == Relation::GreaterEqual ? 0.0 >= c.rhs - opt.feasibility_eps
                                                             : std::fabs(c.rhs) <= opt.feasibility_eps;
      if (!ok) return {LpStatus::Infeasible, 0.0, {}};
    }
    return {LpStatus::Optimal, 0.0, {}};
  }

  const int m = static_cast<int>(lp.constraints.size());
  Tableau t;
  t.structural = lp.variable_count;

  // First pass: count slack columns and normalize each row to a
  // non-negative rhs, remembering its scale for tolerance checks.
  std::vector<Constraint> rows = lp.constraints;
  t.row_scale.assign(m, 1.0);
  for (int r = 0; r < m; ++r) {
    double scale = std::fabs(rows[r].rhs);
    for (double v : rows[r].coeffs) scale = std::max(scale, std::fabs(v));
    t.row_scale[r] = std::max(scale, 1.0);
    if (rows[r].rhs < 0.0) {
      rows[r].rhs = -rows[r].rhs;
      for (double& v : rows[r].coeffs) v = -v;
      if (rows[r].relation == Relation::LessEqual) {
        rows[r].relation = Relation::GreaterEqual;
      } else if (rows[r].relation == Relation::GreaterEqual) {
        rows[r].relation = Relation::LessEqual;
      }
    }
    if (rows[r].relation != Relation::Equal) ++t.slack;
  }

  // A slack basic at rhs works for <= rows; >= and = rows need an
  // artificial to start from the identity.
  std::vector<int> slack_col(m, -1);
  std::vector<int> artificial_col(m, -1);
  int next_slack = t.structural;
  for (int r = 0; r < m; ++r) {
    if (rows[r].relation != Relation::Equal) slack_col[r] = next_slack++;
  }
  int next_artificial = t.structural + t.slack;
  for (int r = 0; r < m; ++r) {
    if (rows[r].relation != Relation::LessEqual) artificial_col[r] = next_artificial++;
  }
  t.artificial = next_artificial - (t.structural + t.slack);

  const int n = t.total_columns();
  t.rows.assign(m, std::vector<double>(n + 1, 0.0));
  t.basis.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < t.structural; ++j) t.rows[r][j] = rows[r].coeffs[j];
    t.rows[r][n] = rows[r].rhs;
    if (slack_col[r] >= 0) {
      t.rows[r][slack_col[r]] = rows[r].relation == Relation::LessEqual ? 1.0 : -1.0;
    }
    if (artificial_col[r] >= 0) {
      t.rows[r][artificial_col[r]] = 1.0;
      t.basis[r] = artificial_col[r];
    } else {
      t.basis[r] = slack_col[r];
    }
  }

  std::vector<bool> allow_all(n, true);

  // Phase 1: drive the artificials to zero by maximizing their
  // negated sum.
  if (t.artificial > 0) {
    std::vector<double> phase1_cost(n, 0.0);
    for (int r = 0; r < m; ++r) {
      if (artificial_col[r] >= 0) phase1_cost[artificial_col[r]] = -1.0;
    }
    if (run_phase(t, phase1_cost, allow_all, opt, "phase1") == PhaseOutcome::Unbounded) {
      throw InternalError("phase-1 simplex reported an unbounded auxiliary objective");
    }
    double infeasibility = -objective_of_basis(t, phase1_cost);
    double tol = 0.0;
    for (int r = 0; r < m; ++r) tol += opt.feasibility_eps * t.row_scale[r];
    if (infeasibility > tol) {
      return {LpStatus::Infeasible, 0.0, {}};
    }

    // Drive surviving artificials out of the basis; a row with no
    // eligible pivot is redundant and gets dropped.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
      if (t.basis[r] < t.structural + t.slack) continue;
      int col = -1;
      for (int j = 0; j < t.structural + t.slack; ++j) {
        if (std::fabs(t.rows[r][j]) > opt.pivot_tol) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(t, r, col);
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
  }

  // Phase 2: real objective, artificial columns barred.
  std::vector<double> cost(n, 0.0);
  for (int j = 0; j < t.structural; ++j) cost[j] = lp.objective[j];
  std::vector<bool> allowed(n, true);
  for (int j = t.structural + t.slack; j < n; ++j) allowed[j] = false;

  if (run_phase(t, cost, allowed, opt, "phase2") == PhaseOutcome::Unbounded) {
    return {LpStatus::Unbounded, 0.0, {}};
  }

  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.variable_values.assign(t.structural, 0.0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < t.structural) {
      solution.variable_values[t.basis[r]] = t.rows[r].back();
    }
  }
  for (double& v : solution.variable_values) {
    if (v < 0.0 && v > -1e-9) v = 0.0;  // round off phase noise at the bound
  }
  solution.objective_value = 0.0;
  for (int j = 0; j < t.structural; ++j) {
    solution.objective_value += lp.objective[j] * solution.variable_values[j];
  }
  return solution;
}

}  // namespace isacnet
