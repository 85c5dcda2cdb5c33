#pragma once

#include <span>
#include <vector>

#include "elaa/geometry.hpp"
#include "elaa/grid.hpp"
#include "elaa/scene.hpp"
#include "elaa/wavefield.hpp"

namespace elaa {

struct StoppingConfig {
  double false_alarm = 0.01;
  int max_iterations = 20;

  void validate() const;
  bool operator==(const StoppingConfig&) const = default;
};

struct EstimatorParams {
  double coarse_step = 4.0;
  double fine_step = 0.1;
  // Half extents of the local window; 0 means one coarse cell per side.
  double fine_half_x = 0.0;
  double fine_half_y = 0.0;
  // Scatterer-wise only: cumulative energy fraction selecting the fine-search
  // support, and the scale of the per-subarray inclusion gate.
  double energy_fraction = 0.5;
  double gate_scale = 0.8;
  StoppingConfig stopping;
  int threads = 1;

  double resolved_fine_half_x() const { return fine_half_x > 0.0 ? fine_half_x : coarse_step; }
  double resolved_fine_half_y() const { return fine_half_y > 0.0 ? fine_half_y : coarse_step; }
  void validate() const;
  bool operator==(const EstimatorParams&) const = default;
};

struct EstimatedPath {
  Point position;
  cdouble amplitude;    // estimates sqrt(P) * gain
  SubarraySet visible;

  bool operator==(const EstimatedPath&) const = default;
};

// Wall-clock seconds spent in each phase, for benchmarking only.
struct PhaseTimings {
  double noise_test = 0.0;
  double coarse_search = 0.0;
  double fine_search = 0.0;
  double amplitude = 0.0;
  double support = 0.0;
};

struct EstimationResult {
  std::vector<EstimatedPath> paths;        // extraction order
  std::vector<cdouble> channel;            // reconstructed channel estimate
  std::vector<int> subarray_path_counts;   // index n-1: paths covering subarray n
  bool truncated = false;
  PhaseTimings timings;
};

// Least-squares amplitude of the masked response atom against z.
cdouble project_amplitude(const ArrayGeometry& geometry, std::span<const cdouble> z,
                          const SubarraySet& mask, Point point);

// Sum of amplitude/sqrt(P) masked atoms over the paths.
std::vector<cdouble> reconstruct_channel(const ArrayGeometry& geometry,
                                         std::span<const EstimatedPath> paths,
                                         double transmit_power);

// Greedy per-subarray extraction: each subarray is processed independently
// with its own residual, coarse-then-fine search and noise-test stop.
EstimationResult subarray_wise_estimate(const ArrayGeometry& geometry,
                                        const PilotSnapshot& snapshot,
                                        const RegionBounds& bounds,
                                        const EstimatorParams& params);

// Greedy whole-array extraction: each iteration picks the active subarrays,
// searches coarse-then-fine over them, then gates which subarrays the new
// path actually covers before subtracting it.
EstimationResult scatterer_wise_estimate(const ArrayGeometry& geometry,
                                         const PilotSnapshot& snapshot,
                                         const RegionBounds& bounds,
                                         const EstimatorParams& params);

// Baseline h = r / sqrt(P).
std::vector<cdouble> ls_estimate(const PilotSnapshot& snapshot);

nlohmann::json result_to_json(const EstimationResult& result, bool include_timings = false);

}  // namespace elaa
