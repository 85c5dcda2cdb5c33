#include "elaa/metrics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace elaa {

std::vector<MseTerm> mse_metric(std::span<const cdouble> true_channel,
                                std::span<const cdouble> estimated_channel, const Scene& scene) {
  const auto elements = static_cast<std::size_t>(scene.geometry.elements());
  if (true_channel.size() != elements || estimated_channel.size() != elements)
    throw std::invalid_argument("mse_metric: channel length does not match the element count");
  std::vector<MseTerm> terms;
  for (int n = 1; n <= scene.geometry.subarrays(); ++n) {
    if (scene.subarray_view(n).empty()) continue;
    const auto [lo, hi] = scene.geometry.subarray_span(n);
    double err = 0.0;
    double ref = 0.0;
    for (int i = lo; i < hi; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      err += std::norm(estimated_channel[idx] - true_channel[idx]);
      ref += std::norm(true_channel[idx]);
    }
    if (!(ref > 0.0))
      throw std::logic_error("mse_metric: zero reference energy on a seen subarray");
    terms.push_back({n, err / ref});
  }
  return terms;
}

std::vector<PairDetection> detection_outcomes(const Scene& scene,
                                              std::span<const EstimatedPath> paths,
                                              double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("detection_outcomes: radius must be > 0");
  std::vector<PairDetection> outcomes;
  for (int n = 1; n <= scene.geometry.subarrays(); ++n) {
    for (int s : scene.subarray_view(n)) {
      const Point truth = scene.scatterers[static_cast<std::size_t>(s)].position;
      bool detected = false;
      for (const EstimatedPath& path : paths) {
        if (!path.visible.contains(n)) continue;
        if (std::hypot(path.position.x - truth.x, path.position.y - truth.y) < radius) {
          detected = true;
          break;
        }
      }
      outcomes.push_back({n, s, detected});
    }
  }
  return outcomes;
}

std::optional<double> DetectionCount::ratio() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(detected) / static_cast<double>(total);
}

DetectionCount count_detections(std::span<const PairDetection> outcomes) {
  DetectionCount count;
  for (const PairDetection& o : outcomes) {
    ++count.total;
    if (o.detected) ++count.detected;
  }
  return count;
}

DetectionCount detection_metric(const Scene& scene, std::span<const EstimatedPath> paths,
                                double radius) {
  const std::vector<PairDetection> outcomes = detection_outcomes(scene, paths, radius);
  return count_detections(outcomes);
}

}  // namespace elaa
