#pragma once

#include <optional>
#include <span>
#include <vector>

#include "elaa/estimators.hpp"
#include "elaa/scene.hpp"

namespace elaa {

struct MseTerm {
  int subarray = 0;
  double value = 0.0;

  bool operator==(const MseTerm&) const = default;
};

// Relative squared error per subarray, restricted to subarrays that see at
// least one scatterer.
std::vector<MseTerm> mse_metric(std::span<const cdouble> true_channel,
                                std::span<const cdouble> estimated_channel, const Scene& scene);

struct PairDetection {
  int subarray = 0;
  int scatterer = 0;   // index into scene.scatterers
  bool detected = false;

  bool operator==(const PairDetection&) const = default;
};

// One row per true (subarray, scatterer) pair: detected when some estimated
// path lies within `radius` of the scatterer and covers the subarray.
std::vector<PairDetection> detection_outcomes(const Scene& scene,
                                              std::span<const EstimatedPath> paths,
                                              double radius = 10.0);

struct DetectionCount {
  int detected = 0;
  int total = 0;

  std::optional<double> ratio() const;
  bool operator==(const DetectionCount&) const = default;
};

DetectionCount count_detections(std::span<const PairDetection> outcomes);

DetectionCount detection_metric(const Scene& scene, std::span<const EstimatedPath> paths,
                                double radius = 10.0);

}  // namespace elaa
