#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elaa/estimators.hpp"
#include "elaa/metrics.hpp"
#include "elaa/scene.hpp"

namespace elaa {

enum class Method { subarray_wise, scatterer_wise, least_squares };

std::string_view method_name(Method method);
Method method_from_name(std::string_view name);

// Stable per-trial seed: any single trial reproduces in isolation.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c);

struct TrialRecord {
  Method method = Method::subarray_wise;
  int subarrays = 0;
  double snr_db = 0.0;
  int trial = 0;
  std::uint64_t scene_seed = 0;
  std::uint64_t noise_seed = 0;
  std::vector<MseTerm> mse;
  std::vector<PairDetection> detections;   // empty for the LS baseline
  bool truncated = false;
  PhaseTimings timings;
  double elapsed_seconds = 0.0;
};

struct SweepCell {
  Method method = Method::subarray_wise;
  int subarrays = 0;
  double snr_db = 0.0;
  int trials = 0;
  double mean_mse = 0.0;
  double se_mse = 0.0;
  std::optional<double> detection_ratio;
  std::optional<double> se_detection;
};

struct SweepConfig {
  std::vector<int> subarray_counts{4};
  std::vector<double> snr_db{10.0, 15.0, 20.0, 25.0};
  int trials = 50;
  std::vector<Method> methods{Method::subarray_wise, Method::scatterer_wise,
                              Method::least_squares};
  SceneConfig scene;         // subarrays and seed are overridden per trial
  EstimatorParams params;
  double detection_radius = 10.0;
  std::uint64_t base_seed = 1;
  int workers = 1;

  void validate() const;
};

struct SweepResult {
  std::vector<TrialRecord> records;   // ordered by (N, SNR, trial, method)
  std::vector<SweepCell> cells;       // ordered by (method, N, SNR)
};

SweepResult run_sweep(const SweepConfig& config);

// CSV with header method,N,snr_db,mean_mse,se_mse,detection_ratio,
// se_detection,trials. Absent detection fields stay empty.
std::string sweep_to_csv(const SweepResult& result);

// One JSON object per line, in record order.
std::string records_to_jsonl(std::span<const TrialRecord> records, bool include_timings = false);

}  // namespace elaa
