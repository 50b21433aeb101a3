#include "rankfill/presets.hpp"

namespace rankfill {

const std::vector<DatasetPreset>& all_presets() {
  static const std::vector<DatasetPreset> presets = {
      {"delicious", 250.0, 4.0, 1000, 300},
      {"lastfm", 0.03, 1.5, 200, 100},
      {"bx", 1.2e-3, 1.3, 3000, 400},
      {"ml100k", 6e-3, 2.5, 100, 10},
      {"netflix", 0.015, 1.2, 500, 200},
      {"yahoo", 5e-3, 1.1, 2000, 300},
  };
  return presets;
}

std::optional<DatasetPreset> find_preset(const std::string& name) {
  for (const DatasetPreset& p : all_presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace rankfill
