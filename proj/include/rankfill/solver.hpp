#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rankfill/prox.hpp"
#include "rankfill/rating_matrix.hpp"

namespace rankfill {

struct SolverConfig {
  double mu0 = 1e-3;     // initial penalty weight, > 0
  double gamma = 1.1;    // penalty growth factor, > 1
  double tol = 1e-4;     // infinity-norm stopping tolerance, > 0
  int max_iter = 300;    // hard iteration cap, >= 1
  std::optional<int> svd_rank_budget;  // forwarded to the prox
  double mu_cap = 1e10;  // mu stops growing here
  // Refuse dense problems above this many entries (rows * cols).
  std::int64_t max_dense_entries = std::int64_t{1} << 28;

  void validate() const;  // throws std::invalid_argument
};

struct SolverState {
  Eigen::MatrixXd x;  // completion iterate
  Eigen::MatrixXd y;  // nonnegative auxiliary iterate
  Eigen::MatrixXd z;  // scaled dual for the X = Y split
  double mu = 0.0;
  int iter = 0;  // 1-based once the loop starts
};

struct SolverReport {
  int iterations = 0;
  bool converged = false;
  // ||X - Y||_F / max(1, ||P_Omega(M)||_F) at exit.
  double final_residual = 0.0;
  // Surrogate value of the prox output spectrum, one entry per iteration.
  std::vector<double> objective_trace;
  double wall_time_seconds = 0.0;
  int final_rank = 0;
};

struct CompletionResult {
  Eigen::MatrixXd x_hat;  // observed entries exact, rest clamped to >= 0
  SolverReport report;
};

using IterationObserver = std::function<void(const SolverState&)>;

// One X update: prox of Y - Z/mu, then observed entries overwritten with
// their bit-exact values from m.
Eigen::MatrixXd x_step(const SolverState& state, const RatingMatrix& m,
                       const ProxOptions& opts = {});

// One Y update: elementwise max(X + Z/mu, 0).
Eigen::MatrixXd y_step(const Eigen::MatrixXd& x, const Eigen::MatrixXd& z,
                       double mu);

// Augmented-Lagrangian completion loop. Alternates the X / Y / Z updates and
// grows mu geometrically (capped). Declares convergence when both
// max(||X - Y||_inf, ||X - X_prev||_inf) <= tol and the prox is settled
// (largest singular-value shrink <= tol), the latter waived when every entry
// is observed. If trace is non-null, one JSON object per iteration is written
// ({"iter", "mu", "residual", "objective", "rank"}).
CompletionResult complete(const RatingMatrix& m, const SolverConfig& cfg = {},
                          const IterationObserver& observer = {},
                          std::ostream* trace = nullptr);

}  // namespace rankfill
