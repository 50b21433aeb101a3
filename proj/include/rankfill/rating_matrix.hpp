#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rankfill {

// One observed user-item interaction. Values are strictly positive; absent
// pairs mean "unobserved", not a zero rating.
struct RatingEntry {
  int user = 0;
  int item = 0;
  double value = 0.0;
};

// Immutable sparse user-item matrix over dense 0-based indices. Entries are
// sorted by (user, item) and duplicate-free; the stored set of positions is
// the observation set Omega.
class RatingMatrix {
 public:
  RatingMatrix(int num_users, int num_items, std::vector<RatingEntry> entries);

  int num_users() const { return num_users_; }
  int num_items() const { return num_items_; }
  std::size_t num_entries() const { return entries_.size(); }

  std::span<const RatingEntry> entries() const { return entries_; }
  std::span<const RatingEntry> user_entries(int user) const;
  bool has(int user, int item) const;

  // Dense zero-filled copy, i.e. P_Omega(M).
  Eigen::MatrixXd to_dense() const;

  // Frobenius norm of the observed values.
  double observed_norm() const;

 private:
  int num_users_;
  int num_items_;
  std::vector<RatingEntry> entries_;
  std::vector<std::size_t> row_ptr_;  // size num_users_ + 1
};

// Dataset summary: counts, average ratings per row/column, density.
struct DatasetMeta {
  int users = 0;
  int items = 0;
  std::size_t transactions = 0;
  double rsize = 0.0;
  double csize = 0.0;
  double density = 0.0;
  std::optional<std::pair<double, double>> rating_range;
};

DatasetMeta dataset_stats(const RatingMatrix& m);

}  // namespace rankfill
