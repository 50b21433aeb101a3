#include "rankfill/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankfill {

namespace {

constexpr double kFlushThreshold = 1e-12;

// log(1 + sigma) + beta/2 (sigma - sigma_a)^2
double scalar_objective(double sigma, double sigma_a, double beta) {
  const double d = sigma - sigma_a;
  return std::log1p(sigma) + 0.5 * beta * d * d;
}

}  // namespace

double logdet_surrogate(const Eigen::VectorXd& singular_values) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    sum += std::log1p(singular_values[i]);
  }
  return sum;
}

double logdet_objective(const Eigen::MatrixXd& x) {
  if (!x.allFinite()) {
    throw std::invalid_argument("logdet_objective requires finite entries");
  }
  if (x.isZero(0.0)) return 0.0;
  return logdet_surrogate(singular_values(x));
}

double scalar_prox(double sigma_a, double beta) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("scalar_prox requires beta > 0");
  }
  if (!(sigma_a >= 0.0)) {
    throw std::invalid_argument("scalar_prox requires sigma_a >= 0");
  }
  // Stationarity inside sigma > 0:
  //   1/(1+sigma) + beta (sigma - sigma_a) = 0
  //   <=> beta sigma^2 + beta (1 - sigma_a) sigma + (1 - beta sigma_a) = 0
  //   <=> sigma = ((sigma_a - 1) +- sqrt((sigma_a + 1)^2 - 4/beta)) / 2.
  double best = 0.0;
  double best_obj = scalar_objective(0.0, sigma_a, beta);
  const double disc = (sigma_a + 1.0) * (sigma_a + 1.0) - 4.0 / beta;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    for (const double root : {(sigma_a - 1.0 - sq) / 2.0,
                              (sigma_a - 1.0 + sq) / 2.0}) {
      if (root < 0.0) continue;
      const double obj = scalar_objective(root, sigma_a, beta);
      if (obj < best_obj || (obj == best_obj && root < best)) {
        best = root;
        best_obj = obj;
      }
    }
  }
  return best;
}

namespace {

ProxResult assemble(const SvdResult& svd, double beta, Eigen::Index rows,
                    Eigen::Index cols) {
  ProxResult out;
  out.spectrum.resize(svd.s.size());
  for (Eigen::Index i = 0; i < svd.s.size(); ++i) {
    // Tiny negative round-off from the SVD backend is clamped.
    const double sigma_a = std::max(svd.s[i], 0.0);
    double shrunk = scalar_prox(sigma_a, beta);
    if (shrunk < kFlushThreshold) shrunk = 0.0;
    out.spectrum[i] = shrunk;
    out.max_shrink = std::max(out.max_shrink, sigma_a - shrunk);
  }
  out.rank = static_cast<int>(
      (out.spectrum.array() > 0.0).count());
  if (out.rank == 0) {
    out.x = Eigen::MatrixXd::Zero(rows, cols);
  } else {
    out.x = svd.u.leftCols(out.rank) *
            out.spectrum.head(out.rank).asDiagonal() *
            svd.v.leftCols(out.rank).transpose();
  }
  return out;
}

}  // namespace

ProxResult matrix_prox_detailed(const Eigen::MatrixXd& a, double beta,
                                const ProxOptions& opts) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("matrix_prox requires beta > 0");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("matrix_prox requires finite entries");
  }
  const int min_dim = static_cast<int>(std::min(a.rows(), a.cols()));
  if (min_dim <= opts.full_svd_max_dim) {
    return assemble(thin_svd(a), beta, a.rows(), a.cols());
  }

  // Large case: partial SVD, growing the budget until the tail provably
  // shrinks to zero (the smallest retained singular value does) or the cap.
  const int cap = std::min(opts.rank_budget.value_or(min_dim), min_dim);
  int budget = std::min(64, cap);
  while (true) {
    const SvdResult svd = truncated_svd(a, budget);
    const double tail = svd.s[svd.s.size() - 1];
    if (budget >= cap || scalar_prox(std::max(tail, 0.0), beta) == 0.0) {
      return assemble(svd, beta, a.rows(), a.cols());
    }
    budget = std::min(budget * 2, cap);
  }
}

Eigen::MatrixXd matrix_prox(const Eigen::MatrixXd& a, double beta,
                            const ProxOptions& opts) {
  return matrix_prox_detailed(a, beta, opts).x;
}

}  // namespace rankfill
