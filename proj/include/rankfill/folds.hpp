#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rankfill/rating_matrix.hpp"

namespace rankfill {

// Per-user leave-one-out split: for each eligible user one observed entry is
// held out as test, everything else stays in train. Users with a single
// observed entry are never tested. `test` is sorted by user.
struct FoldSplit {
  RatingMatrix train;
  std::vector<std::pair<int, int>> test;  // (user, held-out item)
};

// Draws k independent splits. Each fold uses its own RNG stream derived from
// (seed, fold index), so fold j is reproducible without generating folds 0..j-1.
std::vector<FoldSplit> make_folds(const RatingMatrix& m, int k = 5,
                                  std::uint64_t seed = 42);

}  // namespace rankfill
