#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rankfill/rating_matrix.hpp"

namespace rankfill {

enum class TripletFormat {
  kTsvRating,  // user item value [extra columns ignored]
  kTsvBinary,  // user item            (value fixed to 1)
};

// A loaded matrix plus the id vocabulary mapping internal indices back to the
// raw ids found in the file (internal index -> raw id, ascending by raw id).
struct Dataset {
  RatingMatrix matrix;
  std::vector<std::int64_t> user_ids;
  std::vector<std::int64_t> item_ids;
};

// Parses "user<sep>item[<sep>value[<sep>...]]" records. Raw ids may be any
// integers; internal indices are dense and assigned by ascending raw id.
// delimiter '\0' auto-detects tab or comma from the first record. Blank lines
// are skipped; anything else malformed raises std::runtime_error with the
// 1-based line number.
Dataset load_triplets(std::istream& in, TripletFormat format, char delimiter = '\0');
Dataset load_triplets_file(const std::string& path, TripletFormat format,
                           char delimiter = '\0');

// Writes "user<sep>item<sep>value" rows with raw ids, one entry per line, in
// entry order. Values round-trip exactly.
void save_triplets(std::ostream& out, const Dataset& d, char delimiter = '\t');

}  // namespace rankfill
