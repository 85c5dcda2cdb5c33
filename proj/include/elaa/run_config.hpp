#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "elaa/estimators.hpp"
#include "elaa/scene.hpp"
#include "elaa/sweep.hpp"

namespace elaa {

// Inputs for a radiation-pattern map: observation point, its visible
// subarrays and the grid to scan. x may start at 0 here.
struct PatternConfig {
  Point source{120.0, 120.0};
  std::vector<int> visible;   // empty means every subarray
  double step = 1.0;
  RegionBounds bounds{0.0, 200.0, -600.0, 600.0};

  SubarraySet resolved_visible(int subarrays) const;
  void validate(int subarrays) const;
  bool operator==(const PatternConfig&) const = default;
};

struct RunConfig {
  SceneConfig scene;          // scene.seed is driven by the top-level seed
  EstimatorParams estimator;
  std::vector<int> subarray_counts{4};
  std::vector<double> snr_db{10.0, 15.0, 20.0, 25.0};
  int trials = 50;
  std::vector<Method> methods{Method::subarray_wise, Method::scatterer_wise,
                              Method::least_squares};
  double detection_radius = 10.0;
  PatternConfig pattern;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out_dir = ".";
  bool timings = false;

  SweepConfig to_sweep() const;
  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

// Empty or whitespace-only text yields the all-defaults config. Unknown keys
// are rejected at every level.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const RunConfig& config);

}  // namespace elaa
