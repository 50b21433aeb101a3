#include "rankfill/metrics.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rankfill {

namespace {

std::unordered_map<int, const RankedList*> index_lists(
    const std::vector<RankedList>& lists) {
  std::unordered_map<int, const RankedList*> by_user;
  by_user.reserve(lists.size());
  for (const RankedList& list : lists) {
    by_user[list.user] = &list;
  }
  return by_user;
}

}  // namespace

std::vector<HitRecord> collect_hits(const std::vector<RankedList>& lists,
                                    const TestSet& test) {
  const auto by_user = index_lists(lists);
  std::vector<HitRecord> hits;
  for (const auto& [user, item] : test) {
    const auto it = by_user.find(user);
    if (it == by_user.end()) {
      throw std::invalid_argument("no ranked list for test user " +
                                  std::to_string(user));
    }
    const auto& items = it->second->items;
    for (std::size_t pos = 0; pos < items.size(); ++pos) {
      if (items[pos].item == item) {
        hits.push_back({user, static_cast<int>(pos) + 1});
        break;
      }
    }
  }
  return hits;
}

double hit_rate(const std::vector<RankedList>& lists, const TestSet& test) {
  if (test.empty()) {
    throw std::invalid_argument("hit_rate requires a non-empty test set");
  }
  const auto hits = collect_hits(lists, test);
  return static_cast<double>(hits.size()) / static_cast<double>(test.size());
}

double arhr(const std::vector<RankedList>& lists, const TestSet& test) {
  if (test.empty()) {
    throw std::invalid_argument("arhr requires a non-empty test set");
  }
  double sum = 0.0;
  for (const HitRecord& hit : collect_hits(lists, test)) {
    sum += 1.0 / hit.position;
  }
  return sum / static_cast<double>(test.size());
}

}  // namespace rankfill
