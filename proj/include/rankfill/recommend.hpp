#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rankfill/rating_matrix.hpp"

namespace rankfill {

struct ScoredItem {
  int item = 0;
  double score = 0.0;
};

struct RankedList {
  int user = 0;
  std::vector<ScoredItem> items;  // best first
};

// Top n_list items for one user by descending score, the user's training
// items excluded, ties broken by ascending item index. Fewer than n_list
// items are returned when the candidate pool is smaller.
RankedList top_n(const Eigen::MatrixXd& scores, const RatingMatrix& train,
                 int user, int n_list);

// One list per user, users in ascending order.
std::vector<RankedList> top_n_all(const Eigen::MatrixXd& scores,
                                  const RatingMatrix& train, int n_list);

struct ReconStats {
  // Fraction of unobserved cells with value > threshold.
  double recovered_density = 0.0;
  // Mean over all unobserved cells (0 when there are none).
  double mean_recovered = 0.0;
  // Mean over the observed cells (0 when none).
  double mean_preserved = 0.0;
};

ReconStats reconstruction_stats(const Eigen::MatrixXd& x_hat,
                                const RatingMatrix& train,
                                double threshold = 1e-8);

// CSV with header user_id,rank,item_id,score; rank is 1-based. Internal
// indices are translated through the id maps.
void write_ranked_lists_csv(std::ostream& out,
                            const std::vector<RankedList>& lists,
                            const std::vector<std::int64_t>& user_ids,
                            const std::vector<std::int64_t>& item_ids);

}  // namespace rankfill
