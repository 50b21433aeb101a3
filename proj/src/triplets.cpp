#include "rankfill/triplets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankfill {

namespace {

struct RawRecord {
  std::int64_t user = 0;
  std::int64_t item = 0;
  double value = 1.0;
};

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_id(std::string_view field, std::size_t line_no,
                      const char* which) {
  std::int64_t id = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), id);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail_at(line_no, std::string("malformed ") + which + " id '" +
                         std::string(field) + "'");
  }
  return id;
}

double parse_value(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail_at(line_no, "malformed value '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

Dataset load_triplets(std::istream& in, TripletFormat format, char delimiter) {
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  char sep = delimiter;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    if (sep == '\0') {
      sep = line.find('\t') != std::string::npos ? '\t' : ',';
    }
    const auto fields = split_fields(line, sep);
    if (fields.size() < 2) {
      fail_at(line_no, "expected at least 2 fields, got " +
                           std::to_string(fields.size()));
    }
    RawRecord rec;
    rec.user = parse_id(fields[0], line_no, "user");
    rec.item = parse_id(fields[1], line_no, "item");
    if (format == TripletFormat::kTsvRating) {
      if (fields.size() < 3) {
        fail_at(line_no, "rating format expects a value field");
      }
      rec.value = parse_value(fields[2], line_no);
      if (!(rec.value > 0.0)) {
        fail_at(line_no, "non-positive value " + std::string(fields[2]));
      }
    }
    records.push_back(rec);
  }
  if (records.empty()) {
    throw std::runtime_error("no records");
  }

  std::map<std::int64_t, int> user_index;
  std::map<std::int64_t, int> item_index;
  for (const RawRecord& r : records) {
    user_index.emplace(r.user, 0);
    item_index.emplace(r.item, 0);
  }
  Dataset d{RatingMatrix(1, 1, {{0, 0, 1.0}}), {}, {}};
  d.user_ids.reserve(user_index.size());
  for (auto& [raw, idx] : user_index) {
    idx = static_cast<int>(d.user_ids.size());
    d.user_ids.push_back(raw);
  }
  d.item_ids.reserve(item_index.size());
  for (auto& [raw, idx] : item_index) {
    idx = static_cast<int>(d.item_ids.size());
    d.item_ids.push_back(raw);
  }

  std::vector<RatingEntry> entries;
  entries.reserve(records.size());
  for (const RawRecord& r : records) {
    entries.push_back(
        {user_index.at(r.user), item_index.at(r.item), r.value});
  }
  d.matrix = RatingMatrix(static_cast<int>(d.user_ids.size()),
                          static_cast<int>(d.item_ids.size()),
                          std::move(entries));
  return d;
}

Dataset load_triplets_file(const std::string& path, TripletFormat format,
                           char delimiter) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return load_triplets(in, format, delimiter);
}

void save_triplets(std::ostream& out, const Dataset& d, char delimiter) {
  std::ostringstream value;
  value.precision(17);
  for (const RatingEntry& e : d.matrix.entries()) {
    value.str("");
    value << e.value;
    out << d.user_ids[static_cast<std::size_t>(e.user)] << delimiter
        << d.item_ids[static_cast<std::size_t>(e.item)] << delimiter
        << value.str() << '\n';
  }
}

}  // namespace rankfill
