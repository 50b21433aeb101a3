#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rankfill {

// Tuned hyperparameters per dataset family: solver (mu0, gamma) plus the
// matching baseline settings.
struct DatasetPreset {
  std::string name;
  double mu0 = 0.0;
  double gamma = 0.0;
  int puresvd_rank = 0;
  int itemknn_k = 0;
};

const std::vector<DatasetPreset>& all_presets();
std::optional<DatasetPreset> find_preset(const std::string& name);

}  // namespace rankfill
