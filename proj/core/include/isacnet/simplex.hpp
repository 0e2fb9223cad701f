#pragma once

#include <vector>

#include "isacnet/errors.hpp"

namespace isacnet {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<double> coeffs;  // length == LinearProgram::variable_count
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// maximize objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
  int variable_count = 0;
  std::vector<double> objective;  // length == variable_count
  std::vector<Constraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective_value = 0.0;          // meaningful iff Optimal
  std::vector<double> variable_values;   // meaningful iff Optimal
};

struct SimplexOptions {
  double feasibility_eps = 1e-9;  // scaled by row magnitude
  double pivot_tol = 1e-10;
  // After this many consecutive non-improving pivots (times the basis
  // size) the entering rule switches from Dantzig to Bland until the
  // objective improves again.
  int stall_factor = 3;
  bool log_tableaus = false;  // dump tableaus to stderr at every pivot
};

/// Two-phase primal simplex on the dense standard-form tableau.
/// Deterministic: identical inputs produce bit-identical outputs.
/// Throws Error on dimension mismatch (before solving) and
/// InternalError on numerical breakdown; never returns a silently
/// wrong answer.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options);
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace isacnet
