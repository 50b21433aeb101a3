#include "rankfill/folds.hpp"

#include <stdexcept>

#include "rankfill/rng.hpp"

namespace rankfill {

std::vector<FoldSplit> make_folds(const RatingMatrix& m, int k,
                                  std::uint64_t seed) {
  if (k <= 0) {
    throw std::invalid_argument("fold count must be positive");
  }
  std::vector<FoldSplit> folds;
  folds.reserve(static_cast<std::size_t>(k));
  for (int fold = 0; fold < k; ++fold) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(fold)));
    std::vector<RatingEntry> train;
    train.reserve(m.num_entries());
    std::vector<std::pair<int, int>> test;
    for (int user = 0; user < m.num_users(); ++user) {
      const auto row = m.user_entries(user);
      if (row.size() < 2) {
        train.insert(train.end(), row.begin(), row.end());
        continue;
      }
      const std::size_t held_out =
          static_cast<std::size_t>(rng.below(row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i == held_out) {
          test.emplace_back(user, row[i].item);
        } else {
          train.push_back(row[i]);
        }
      }
    }
    folds.push_back(FoldSplit{
        RatingMatrix(m.num_users(), m.num_items(), std::move(train)),
        std::move(test)});
  }
  return folds;
}

}  // namespace rankfill
