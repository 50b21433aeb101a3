#pragma once

#include <Eigen/Dense>

#include <vector>

#include "rankfill/rating_matrix.hpp"

namespace rankfill {

// Rank-k truncated SVD of the zero-filled rating matrix; scores are the
// reconstruction U_k S_k V_k^T.
Eigen::MatrixXd puresvd_scores(const RatingMatrix& train, int rank_k);

struct ItemNeighbor {
  int item = 0;
  double weight = 0.0;  // cosine similarity, > 0
};

struct ItemSimilarityModel {
  int k = 0;
  // neighbors[j]: up to k strongest neighbors of item j, weight descending,
  // item ascending on ties, j itself excluded.
  std::vector<std::vector<ItemNeighbor>> neighbors;
};

// Dense item-item cosine similarity of the zero-filled matrix columns;
// zero-norm columns yield zero similarity, diagonal forced to zero.
Eigen::MatrixXd item_cosine_similarity(const RatingMatrix& train);

ItemSimilarityModel fit_item_knn(const RatingMatrix& train, int k);

// score(u, j) = sum of similarities from j's retained neighbors that u has
// rated in train (ratings treated as implicit feedback).
Eigen::MatrixXd itemknn_scores(const RatingMatrix& train, int k);

}  // namespace rankfill
