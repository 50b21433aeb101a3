#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace rankfill {

struct SvdResult {
  Eigen::MatrixXd u;  // m x r
  Eigen::VectorXd s;  // r, nonincreasing, >= 0
  Eigen::MatrixXd v;  // n x r, so that a ~= u * s.asDiagonal() * v^T
};

// Thin SVD. Backed by LAPACK dgesdd when available, Eigen BDCSVD otherwise.
// Throws std::runtime_error if the factorization does not converge.
SvdResult thin_svd(const Eigen::MatrixXd& a);

// Singular values only (cheaper than thin_svd).
Eigen::VectorXd singular_values(const Eigen::MatrixXd& a);

// Deterministic randomized top-`rank` SVD via subspace iteration with a fixed
// seed. Suitable for matrices with decaying spectra; the tail beyond `rank`
// is dropped.
SvdResult truncated_svd(const Eigen::MatrixXd& a, int rank,
                        int power_iterations = 2,
                        std::uint64_t seed = 0x72616e6b66696c6cULL);

}  // namespace rankfill
