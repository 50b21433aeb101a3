#include "rankfill/rating_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rankfill {

RatingMatrix::RatingMatrix(int num_users, int num_items,
                           std::vector<RatingEntry> entries)
    : num_users_(num_users), num_items_(num_items), entries_(std::move(entries)) {
  if (num_users_ <= 0 || num_items_ <= 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  for (const RatingEntry& e : entries_) {
    if (e.user < 0 || e.user >= num_users_ || e.item < 0 || e.item >= num_items_) {
      throw std::invalid_argument("entry (" + std::to_string(e.user) + ", " +
                                  std::to_string(e.item) + ") out of range");
    }
    if (!(e.value > 0.0) || !std::isfinite(e.value)) {
      throw std::invalid_argument("entry (" + std::to_string(e.user) + ", " +
                                  std::to_string(e.item) +
                                  ") must have a finite positive value");
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const RatingEntry& a, const RatingEntry& b) {
              return a.user != b.user ? a.user < b.user : a.item < b.item;
            });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].user == entries_[i].user &&
        entries_[i - 1].item == entries_[i].item) {
      throw std::invalid_argument(
          "duplicate entry (" + std::to_string(entries_[i].user) + ", " +
          std::to_string(entries_[i].item) + ")");
    }
  }
  row_ptr_.assign(static_cast<std::size_t>(num_users_) + 1, 0);
  for (const RatingEntry& e : entries_) {
    ++row_ptr_[static_cast<std::size_t>(e.user) + 1];
  }
  for (std::size_t u = 0; u < static_cast<std::size_t>(num_users_); ++u) {
    row_ptr_[u + 1] += row_ptr_[u];
  }
}

std::span<const RatingEntry> RatingMatrix::user_entries(int user) const {
  if (user < 0 || user >= num_users_) {
    throw std::out_of_range("user index " + std::to_string(user) +
                            " out of range");
  }
  const std::size_t begin = row_ptr_[static_cast<std::size_t>(user)];
  const std::size_t end = row_ptr_[static_cast<std::size_t>(user) + 1];
  return {entries_.data() + begin, end - begin};
}

bool RatingMatrix::has(int user, int item) const {
  const auto row = user_entries(user);
  const auto it = std::lower_bound(
      row.begin(), row.end(), item,
      [](const RatingEntry& e, int key) { return e.item < key; });
  return it != row.end() && it->item == item;
}

Eigen::MatrixXd RatingMatrix::to_dense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(num_users_, num_items_);
  for (const RatingEntry& e : entries_) {
    dense(e.user, e.item) = e.value;
  }
  return dense;
}

double RatingMatrix::observed_norm() const {
  double sum_sq = 0.0;
  for (const RatingEntry& e : entries_) {
    sum_sq += e.value * e.value;
  }
  return std::sqrt(sum_sq);
}

DatasetMeta dataset_stats(const RatingMatrix& m) {
  if (m.num_entries() == 0) {
    throw std::invalid_argument("dataset_stats requires a non-empty matrix");
  }
  DatasetMeta meta;
  meta.users = m.num_users();
  meta.items = m.num_items();
  meta.transactions = m.num_entries();
  const double trns = static_cast<double>(meta.transactions);
  meta.rsize = trns / meta.users;
  meta.csize = trns / meta.items;
  meta.density = trns / (static_cast<double>(meta.users) * meta.items);
  double lo = m.entries().front().value;
  double hi = lo;
  for (const RatingEntry& e : m.entries()) {
    lo = std::min(lo, e.value);
    hi = std::max(hi, e.value);
  }
  meta.rating_range = std::make_pair(lo, hi);
  return meta;
}

}  // namespace rankfill
