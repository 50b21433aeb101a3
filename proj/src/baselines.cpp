#include "rankfill/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankfill/svd.hpp"

namespace rankfill {

Eigen::MatrixXd puresvd_scores(const RatingMatrix& train, int rank_k) {
  const int min_dim = std::min(train.num_users(), train.num_items());
  if (rank_k < 1 || rank_k > min_dim) {
    throw std::invalid_argument("rank_k must be in [1, min(m, n)]");
  }
  const Eigen::MatrixXd dense = train.to_dense();
  SvdResult svd;
  // Exact factorization for small problems; sketched for large ones where the
  // requested rank is far below the full spectrum.
  if (min_dim <= 2000 || rank_k + 10 >= min_dim) {
    svd = thin_svd(dense);
    svd.u.conservativeResize(Eigen::NoChange, rank_k);
    svd.s.conservativeResize(rank_k);
    svd.v.conservativeResize(Eigen::NoChange, rank_k);
  } else {
    svd = truncated_svd(dense, rank_k);
  }
  return svd.u * svd.s.asDiagonal() * svd.v.transpose();
}

Eigen::MatrixXd item_cosine_similarity(const RatingMatrix& train) {
  const Eigen::MatrixXd dense = train.to_dense();
  const Eigen::VectorXd norms = dense.colwise().norm();
  Eigen::MatrixXd sim = dense.transpose() * dense;
  for (int i = 0; i < sim.rows(); ++i) {
    for (int j = 0; j < sim.cols(); ++j) {
      const double denom = norms[i] * norms[j];
      sim(i, j) = denom > 0.0 ? sim(i, j) / denom : 0.0;
    }
  }
  sim.diagonal().setZero();
  return sim;
}

ItemSimilarityModel fit_item_knn(const RatingMatrix& train, int k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1");
  }
  const Eigen::MatrixXd sim = item_cosine_similarity(train);
  ItemSimilarityModel model;
  model.k = k;
  model.neighbors.resize(static_cast<std::size_t>(train.num_items()));
  std::vector<ItemNeighbor> candidates;
  for (int j = 0; j < train.num_items(); ++j) {
    candidates.clear();
    for (int i = 0; i < train.num_items(); ++i) {
      if (sim(i, j) > 0.0) candidates.push_back({i, sim(i, j)});
    }
    const std::size_t keep =
        std::min(candidates.size(), static_cast<std::size_t>(k));
    std::partial_sort(candidates.begin(), candidates.begin() + keep,
                      candidates.end(),
                      [](const ItemNeighbor& a, const ItemNeighbor& b) {
                        return a.weight != b.weight ? a.weight > b.weight
                                                    : a.item < b.item;
                      });
    candidates.resize(keep);
    model.neighbors[static_cast<std::size_t>(j)] = candidates;
  }
  return model;
}

Eigen::MatrixXd itemknn_scores(const RatingMatrix& train, int k) {
  const ItemSimilarityModel model = fit_item_knn(train, k);
  // Reverse adjacency: which candidates j each rated item i contributes to,
  // so scoring is one scatter pass over the training entries.
  std::vector<std::vector<ItemNeighbor>> contributions(
      static_cast<std::size_t>(train.num_items()));
  for (int j = 0; j < train.num_items(); ++j) {
    for (const ItemNeighbor& nb : model.neighbors[static_cast<std::size_t>(j)]) {
      contributions[static_cast<std::size_t>(nb.item)].push_back(
          {j, nb.weight});
    }
  }
  Eigen::MatrixXd scores =
      Eigen::MatrixXd::Zero(train.num_users(), train.num_items());
  for (const RatingEntry& e : train.entries()) {
    for (const ItemNeighbor& target :
         contributions[static_cast<std::size_t>(e.item)]) {
      scores(e.user, target.item) += target.weight;
    }
  }
  return scores;
}

}  // namespace rankfill
