#pragma once

#include <utility>
#include <vector>

#include "rankfill/recommend.hpp"

namespace rankfill {

// Held-out (user, item) pairs, one per user.
using TestSet = std::vector<std::pair<int, int>>;

struct HitRecord {
  int user = 0;
  int position = 0;  // 1-based rank of the held-out item
};

// Looks up each test pair in its user's ranked list. Throws
// std::invalid_argument when a test user has no list. Users whose item is
// absent from the list simply produce no record.
std::vector<HitRecord> collect_hits(const std::vector<RankedList>& lists,
                                    const TestSet& test);

// hits / #test users. Throws std::invalid_argument on an empty test set.
double hit_rate(const std::vector<RankedList>& lists, const TestSet& test);

// (1 / #test users) * sum over hits of 1/position.
double arhr(const std::vector<RankedList>& lists, const TestSet& test);

}  // namespace rankfill
