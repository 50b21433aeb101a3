#include "rankfill/svd.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankfill/rng.hpp"

#ifdef RANKFILL_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace rankfill {

namespace {

#ifdef RANKFILL_HAVE_LAPACKE
SvdResult lapack_thin_svd(const Eigen::MatrixXd& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int r = std::min(m, n);
  Eigen::MatrixXd work = a;  // dgesdd destroys its input
  SvdResult out;
  out.u.resize(m, r);
  out.s.resize(r);
  Eigen::MatrixXd vt(r, n);
  const lapack_int info = LAPACKE_dgesdd(
      LAPACK_COL_MAJOR, 'S', m, n, work.data(), m, out.s.data(),
      out.u.data(), m, vt.data(), r);
  if (info != 0) {
    throw std::runtime_error("SVD did not converge (dgesdd info=" +
                             std::to_string(info) + ")");
  }
  out.v = vt.transpose();
  return out;
}

Eigen::VectorXd lapack_singular_values(const Eigen::MatrixXd& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  Eigen::MatrixXd work = a;
  Eigen::VectorXd s(std::min(m, n));
  const lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n,
                                         work.data(), m, s.data(), nullptr, m,
                                         nullptr, n);
  if (info != 0) {
    throw std::runtime_error("SVD did not converge (dgesdd info=" +
                             std::to_string(info) + ")");
  }
  return s;
}
#endif

SvdResult eigen_thin_svd(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("SVD did not converge (BDCSVD)");
  }
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

// Thin orthonormal basis of the column span.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

}  // namespace

SvdResult thin_svd(const Eigen::MatrixXd& a) {
  if (a.size() == 0) {
    throw std::invalid_argument("thin_svd requires a non-empty matrix");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("thin_svd requires finite entries");
  }
#ifdef RANKFILL_HAVE_LAPACKE
  return lapack_thin_svd(a);
#else
  return eigen_thin_svd(a);
#endif
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  if (a.size() == 0) {
    throw std::invalid_argument("singular_values requires a non-empty matrix");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("singular_values requires finite entries");
  }
#ifdef RANKFILL_HAVE_LAPACKE
  return lapack_singular_values(a);
#else
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("SVD did not converge (BDCSVD)");
  }
  return svd.singularValues();
#endif
}

SvdResult truncated_svd(const Eigen::MatrixXd& a, int rank,
                        int power_iterations, std::uint64_t seed) {
  const int min_dim = static_cast<int>(std::min(a.rows(), a.cols()));
  if (rank <= 0) {
    throw std::invalid_argument("truncated_svd rank must be positive");
  }
  rank = std::min(rank, min_dim);

  // With little to gain from sketching, fall back to the exact path.
  if (rank + 10 >= min_dim) {
    SvdResult full = thin_svd(a);
    return {full.u.leftCols(rank), full.s.head(rank), full.v.leftCols(rank)};
  }

  const int sketch = std::min(rank + 10, min_dim);
  Rng rng(seed);
  Eigen::MatrixXd omega(a.cols(), sketch);
  for (int j = 0; j < sketch; ++j) {
    for (int i = 0; i < omega.rows(); ++i) {
      omega(i, j) = rng.normal();
    }
  }
  Eigen::MatrixXd q = orthonormalize(a * omega);
  for (int it = 0; it < power_iterations; ++it) {
    q = orthonormalize(a.transpose() * q);
    q = orthonormalize(a * q);
  }
  SvdResult small = thin_svd(q.transpose() * a);
  return {(q * small.u).leftCols(rank), small.s.head(rank),
          small.v.leftCols(rank)};
}

}  // namespace rankfill
