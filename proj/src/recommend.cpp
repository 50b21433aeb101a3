#include "rankfill/recommend.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rankfill {

RankedList top_n(const Eigen::MatrixXd& scores, const RatingMatrix& train,
                 int user, int n_list) {
  if (user < 0 || user >= train.num_users()) {
    throw std::out_of_range("user index " + std::to_string(user) +
                            " out of range");
  }
  if (scores.rows() != train.num_users() ||
      scores.cols() != train.num_items()) {
    throw std::invalid_argument("score matrix shape mismatch");
  }
  if (n_list < 1) {
    throw std::invalid_argument("n_list must be positive");
  }
  RankedList list;
  list.user = user;
  const auto row = train.user_entries(user);
  auto next_train = row.begin();
  for (int j = 0; j < train.num_items(); ++j) {
    if (next_train != row.end() && next_train->item == j) {
      ++next_train;
      continue;
    }
    list.items.push_back({j, scores(user, j)});
  }
  const std::size_t keep =
      std::min(list.items.size(), static_cast<std::size_t>(n_list));
  // Score descending, item index ascending on ties; partial sort keeps only
  // the head we return.
  std::partial_sort(list.items.begin(), list.items.begin() + keep,
                    list.items.end(),
                    [](const ScoredItem& a, const ScoredItem& b) {
                      return a.score != b.score ? a.score > b.score
                                                : a.item < b.item;
                    });
  list.items.resize(keep);
  return list;
}

std::vector<RankedList> top_n_all(const Eigen::MatrixXd& scores,
                                  const RatingMatrix& train, int n_list) {
  std::vector<RankedList> lists;
  lists.reserve(static_cast<std::size_t>(train.num_users()));
  for (int user = 0; user < train.num_users(); ++user) {
    lists.push_back(top_n(scores, train, user, n_list));
  }
  return lists;
}

ReconStats reconstruction_stats(const Eigen::MatrixXd& x_hat,
                                const RatingMatrix& train, double threshold) {
  if (x_hat.rows() != train.num_users() ||
      x_hat.cols() != train.num_items()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  ReconStats stats;
  double observed_sum = 0.0;
  for (const RatingEntry& e : train.entries()) {
    observed_sum += x_hat(e.user, e.item);
  }
  const std::size_t observed = train.num_entries();
  if (observed > 0) {
    stats.mean_preserved = observed_sum / static_cast<double>(observed);
  }

  const double total_sum = x_hat.sum();
  std::size_t recovered = 0;
  for (int user = 0; user < train.num_users(); ++user) {
    auto row = train.user_entries(user);
    auto next_train = row.begin();
    for (int j = 0; j < train.num_items(); ++j) {
      if (next_train != row.end() && next_train->item == j) {
        ++next_train;
        continue;
      }
      if (x_hat(user, j) > threshold) ++recovered;
    }
  }
  const std::size_t unobserved =
      static_cast<std::size_t>(x_hat.size()) - observed;
  if (unobserved > 0) {
    stats.recovered_density =
        static_cast<double>(recovered) / static_cast<double>(unobserved);
    stats.mean_recovered =
        (total_sum - observed_sum) / static_cast<double>(unobserved);
  }
  return stats;
}

void write_ranked_lists_csv(std::ostream& out,
                            const std::vector<RankedList>& lists,
                            const std::vector<std::int64_t>& user_ids,
                            const std::vector<std::int64_t>& item_ids) {
  out << "user_id,rank,item_id,score\n";
  std::ostringstream score;
  score.precision(17);
  for (const RankedList& list : lists) {
    int rank = 1;
    for (const ScoredItem& si : list.items) {
      score.str("");
      score << si.score;
      out << user_ids[static_cast<std::size_t>(list.user)] << ',' << rank
          << ',' << item_ids[static_cast<std::size_t>(si.item)] << ','
          << score.str() << '\n';
      ++rank;
    }
  }
}

}  // namespace rankfill
