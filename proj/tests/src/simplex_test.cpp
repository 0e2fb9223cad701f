#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "isacnet/simplex.hpp"

using namespace isacnet;

namespace {

LinearProgram make_lp(int vars, std::vector<double> objective,
                      std::vector<Constraint> constraints) {
  LinearProgram lp;
  lp.variable_count = vars;
  lp.objective = std::move(objective);
  lp.constraints = std::move(constraints);
  return lp;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

}  // namespace

TEST_CASE("one-variable programs") {
  auto lp = make_lp(1, {1.0}, {{{1.0}, Relation::LessEqual, 3.0}});
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(sol.variable_values[0] == doctest::Approx(3.0).epsilon(1e-9));

  lp = make_lp(1, {1.0}, {{{1.0}, Relation::LessEqual, -1.0}});
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);

  lp = make_lp(1, {1.0}, {});
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);

  // Nonnegativity alone bounds a decreasing objective.
  lp = make_lp(1, {-1.0}, {});
  sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == 0.0);
}

TEST_CASE("two variables sharing a budget") {
  const auto lp = make_lp(2, {1.0, 1.0},
                          {{{1.0, 1.0}, Relation::LessEqual, 5.0},
                           {{1.0, 0.0}, Relation::LessEqual, 2.0}});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("equality and greater-equal rows go through phase one") {
  auto lp = make_lp(2, {0.0, 1.0},
                    {{{1.0, 1.0}, Relation::Equal, 3.0},
                     {{1.0, 0.0}, Relation::GreaterEqual, 1.0}});
  LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sol.variable_values[0] == doctest::Approx(1.0).epsilon(1e-9));

  lp = make_lp(1, {-1.0},
               {{{1.0}, Relation::GreaterEqual, 2.0}, {{1.0}, Relation::LessEqual, 5.0}});
  sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(-2.0).epsilon(1e-9));

  // Contradictory equalities are infeasible.
  lp = make_lp(1, {1.0},
               {{{1.0}, Relation::Equal, 1.0}, {{1.0}, Relation::Equal, 2.0}});
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("duplicated equality rows are handled as redundant") {
  const auto lp = make_lp(2, {1.0, 0.0},
                          {{{1.0, 1.0}, Relation::Equal, 2.0},
                           {{1.0, 1.0}, Relation::Equal, 2.0}});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("negative right-hand sides are normalized") {
  // -x1 <= -2 is x1 >= 2 in disguise.
  const auto lp = make_lp(1, {-1.0},
                          {{{-1.0}, Relation::LessEqual, -2.0},
                           {{1.0}, Relation::LessEqual, 4.0}});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("empty variable set reduces to a feasibility check") {
  auto lp = make_lp(0, {}, {{{}, Relation::LessEqual, 1.0}});
  CHECK(solve_lp(lp).status == LpStatus::Optimal);
  CHECK(solve_lp(lp).objective_value == 0.0);

  lp = make_lp(0, {}, {{{}, Relation::LessEqual, -1.0}});
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);

  lp = make_lp(0, {}, {{{}, Relation::Equal, 0.0}});
  CHECK(solve_lp(lp).status == LpStatus::Optimal);
}

TEST_CASE("malformed programs are rejected") {
  auto lp = make_lp(2, {1.0}, {});
  CHECK_THROWS_AS(solve_lp(lp), Error);

  lp = make_lp(1, {1.0}, {{{1.0, 2.0}, Relation::LessEqual, 1.0}});
  CHECK_THROWS_AS(solve_lp(lp), Error);

  lp = make_lp(1, {std::nan("")}, {});
  CHECK_THROWS_AS(solve_lp(lp), Error);

  lp = make_lp(1, {1.0}, {{{1.0}, Relation::LessEqual, std::nan("")}});
  CHECK_THROWS_AS(solve_lp(lp), Error);

  lp = make_lp(-1, {}, {});
  CHECK_THROWS_AS(solve_lp(lp), Error);
}

TEST_CASE("a classical cycling instance terminates at the optimum") {
  // Degenerate pivots stall here under a naive largest-coefficient
  // rule; the fallback rule must still reach the optimum 1/20 at
  // (0.04, 0, 1, 0), which is verifiable by substitution.
  const auto lp = make_lp(4, {0.75, -150.0, 0.02, -6.0},
                          {{{0.25, -60.0, -0.04, 9.0}, Relation::LessEqual, 0.0},
                           {{0.5, -90.0, -0.02, 3.0}, Relation::LessEqual, 0.0},
                           {{0.0, 0.0, 1.0, 0.0}, Relation::LessEqual, 1.0}});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(sol.variable_values[0] == doctest::Approx(0.04).epsilon(1e-7));
  CHECK(sol.variable_values[1] == doctest::Approx(0.0));
  CHECK(sol.variable_values[2] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sol.variable_values[3] == doctest::Approx(0.0));
}

TEST_CASE("a steep simplex path still terminates") {
  const auto lp = make_lp(3, {100.0, 10.0, 1.0},
                          {{{1.0, 0.0, 0.0}, Relation::LessEqual, 1.0},
                           {{20.0, 1.0, 0.0}, Relation::LessEqual, 100.0},
                           {{200.0, 20.0, 1.0}, Relation::LessEqual, 10000.0}});
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(10000.0).epsilon(1e-9));
}

TEST_CASE("repeat solves are bit-identical") {
  const auto lp = make_lp(4, {0.75, -150.0, 0.02, -6.0},
                          {{{0.25, -60.0, -0.04, 9.0}, Relation::LessEqual, 0.0},
                           {{0.5, -90.0, -0.02, 3.0}, Relation::LessEqual, 0.0},
                           {{0.0, 0.0, 1.0, 0.0}, Relation::LessEqual, 1.0}});
  const LpSolution first = solve_lp(lp);
  const LpSolution second = solve_lp(lp);
  CHECK(first.objective_value == second.objective_value);
  CHECK(first.variable_values == second.variable_values);
}

TEST_CASE("random feasible programs solve within tolerance") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> var_dist(1, 6);
  std::uniform_int_distribution<int> row_dist(1, 6);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> point(0.0, 3.0);
  std::uniform_real_distribution<double> slackr(0.0, 2.0);
  std::uniform_int_distribution<int> rel_dist(0, 2);

  for (int trial = 0; trial < 200; ++trial) {
    const int n = var_dist(rng);
    const int m = row_dist(rng);
    std::vector<double> x0(static_cast<size_t>(n));
    for (double& v : x0) v = point(rng);

    LinearProgram lp;
    lp.variable_count = n;
    lp.objective.resize(static_cast<size_t>(n));
    for (double& v : lp.objective) v = coeff(rng);

    for (int i = 0; i < m; ++i) {
      Constraint row;
      row.coeffs.resize(static_cast<size_t>(n));
      for (double& v : row.coeffs) v = coeff(rng);
      const double at_x0 = dot(row.coeffs, x0);
      const int r = rel_dist(rng);
      if (r == 0) {
        row.relation = Relation::LessEqual;
        row.rhs = at_x0 + slackr(rng);
      } else if (r == 1) {
        row.relation = Relation::GreaterEqual;
        row.rhs = at_x0 - slackr(rng);
      } else {
        row.relation = Relation::Equal;
        row.rhs = at_x0;
      }
      lp.constraints.push_back(std::move(row));
    }
    // Keep the feasible set bounded so every trial has an optimum.
    Constraint box;
    box.coeffs.assign(static_cast<size_t>(n), 1.0);
    box.relation = Relation::LessEqual;
    double x0_sum = 0.0;
    for (double v : x0) x0_sum += v;
    box.rhs = x0_sum + 10.0;
    lp.constraints.push_back(std::move(box));

    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(sol.variable_values.size() == static_cast<size_t>(n));

    // x0 is feasible by construction, so the optimum dominates it.
    CHECK(sol.objective_value >= dot(lp.objective, x0) - 1e-7);

    // The returned point satisfies every row and the sign constraint.
    for (double v : sol.variable_values) CHECK(v >= 0.0);
    for (const Constraint& row : lp.constraints) {
      const double lhs = dot(row.coeffs, sol.variable_values);
      double scale = std::fabs(row.rhs);
      for (size_t j = 0; j < row.coeffs.size(); ++j) {
        scale = std::max(scale, std::fabs(row.coeffs[j] * sol.variable_values[j]));
      }
      const double tol = 1e-7 * std::max(1.0, scale);
      if (row.relation == Relation::LessEqual) {
        CHECK(lhs <= row.rhs + tol);
      } else if (row.relation == Relation::GreaterEqual) {
        CHECK(lhs >= row.rhs - tol);
      } else {
        CHECK(std::fabs(lhs - row.rhs) <= tol);
      }
    }
  }
}

TEST_CASE("weak duality bounds hold on random certificates") {
  std::mt19937 rng(7151991);
  std::uniform_int_distribution<int> var_dist(1, 5);
  std::uniform_int_distribution<int> row_dist(1, 5);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> nonneg(0.0, 2.0);

  for (int trial = 0; trial < 100; ++trial) {
    const int n = var_dist(rng);
    const int m = row_dist(rng);
    std::vector<std::vector<double>> a(static_cast<size_t>(m),
                                       std::vector<double>(static_cast<size_t>(n)));
    std::vector<double> y(static_cast<size_t>(m));
    std::vector<double> b(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (double& v : a[static_cast<size_t>(i)]) v = coeff(rng);
      y[static_cast<size_t>(i)] = nonneg(rng);
      b[static_cast<size_t>(i)] = nonneg(rng);  // b >= 0 keeps x = 0 feasible
    }

    LinearProgram lp;
    lp.variable_count = n;
    lp.objective.assign(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
      double col = 0.0;
      for (int i = 0; i < m; ++i) col += a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                         y[static_cast<size_t>(i)];
      lp.objective[static_cast<size_t>(j)] = col - nonneg(rng);  // A^T y >= c
    }
    for (int i = 0; i < m; ++i) {
      lp.constraints.push_back({a[static_cast<size_t>(i)], Relation::LessEqual,
                                b[static_cast<size_t>(i)]});
    }

    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value >= -1e-9);             // x = 0 is feasible
    CHECK(sol.objective_value <= dot(b, y) + 1e-7);  // weak duality
  }
}
