#pragma once

#include <Eigen/Dense>

#include <optional>

#include "rankfill/svd.hpp"

namespace rankfill {

// Rank surrogate sum_i log(1 + sigma_i). Nonnegative, zero only for the zero
// matrix, and bounded above by the nuclear norm sum_i sigma_i.
double logdet_surrogate(const Eigen::VectorXd& singular_values);
double logdet_objective(const Eigen::MatrixXd& x);

// argmin_{sigma >= 0} log(1 + sigma) + beta/2 (sigma - sigma_a)^2.
//
// The stationarity condition reduces to the quadratic
//   beta sigma^2 + beta (1 - sigma_a) sigma + (1 - beta sigma_a) = 0,
// and the minimizer is found by comparing the objective over {0} and the
// nonnegative real roots, taking the smallest candidate on exact ties. This
// covers the degenerate boundary cases (no real root, double root at zero)
// without case analysis.
double scalar_prox(double sigma_a, double beta);

struct ProxOptions {
  // min(m,n) above this switches from a full thin SVD to the adaptive
  // truncated path.
  int full_svd_max_dim = 2000;
  // Cap for the truncated rank; defaults to min(m,n).
  std::optional<int> rank_budget;
};

struct ProxResult {
  Eigen::MatrixXd x;
  Eigen::VectorXd spectrum;  // shrunk singular values, nonincreasing
  double max_shrink = 0.0;   // max_i |sigma_i - sigma_i^*| over computed values
  int rank = 0;              // nonzeros in spectrum
};

// Minimizes logdet_surrogate(X) + beta/2 ||X - a||_F^2 by shrinking the
// singular values of a (unitary invariance): a = U S V^T maps to
// U diag(scalar_prox(S)) V^T. Shrunk values below 1e-12 are flushed to zero.
//
// The truncated path starts from a small rank budget and doubles it until the
// smallest retained singular value shrinks to zero (so the dropped tail would
// shrink to zero too) or the budget cap is hit.
ProxResult matrix_prox_detailed(const Eigen::MatrixXd& a, double beta,
                                const ProxOptions& opts = {});
Eigen::MatrixXd matrix_prox(const Eigen::MatrixXd& a, double beta,
                            const ProxOptions& opts = {});

}  // namespace rankfill
