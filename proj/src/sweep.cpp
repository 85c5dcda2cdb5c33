#include "elaa/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "elaa/format.hpp"
#include "elaa/wavefield.hpp"

namespace elaa {
namespace {

constexpr std::uint64_t kSceneTag = 0x53ce4e5eed5ULL;
constexpr std::uint64_t kNoiseTag = 0x4015e5eed5ULL;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::subarray_wise: return "subarray";
    case Method::scatterer_wise: return "scatterer";
    case Method::least_squares: return "ls";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(std::string_view name) {
  if (name == "subarray") return Method::subarray_wise;
  if (name == "scatterer") return Method::scatterer_wise;
  if (name == "ls") return Method::least_squares;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected subarray, scatterer or ls)");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c) {
  std::uint64_t x = mix64(base ^ tag);
  x = mix64(x ^ a);
  x = mix64(x ^ b);
  x = mix64(x ^ c);
  return x;
}

void SweepConfig::validate() const {
  if (subarray_counts.empty()) throw std::invalid_argument("sweep: subarray_counts is empty");
  if (snr_db.empty()) throw std::invalid_argument("sweep: snr_db is empty");
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (methods.empty()) throw std::invalid_argument("sweep: methods is empty");
  if (!(detection_radius > 0.0))
    throw std::invalid_argument("sweep: detection_radius must be > 0");
  if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");
  params.validate();
  for (int n : subarray_counts) {
    SceneConfig per_cell = scene;
    per_cell.subarrays = n;
    per_cell.validate();
  }
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();

  const std::size_t n_axis = config.subarray_counts.size();
  const std::size_t snr_axis = config.snr_db.size();
  const auto trials = static_cast<std::size_t>(config.trials);
  const std::size_t methods = config.methods.size();
  const std::size_t tasks = n_axis * snr_axis * trials;

  SweepResult result;
  result.records.resize(tasks * methods);

  const auto run_task = [&](std::size_t task) {
    const std::size_t trial = task % trials;
    const std::size_t snr_i = (task / trials) % snr_axis;
    const std::size_t n_i = task / (trials * snr_axis);
    const int subarrays = config.subarray_counts[n_i];
    const double snr_db = config.snr_db[snr_i];

    const std::uint64_t scene_seed = derive_seed(config.base_seed, kSceneTag, n_i, snr_i, trial);
    const std::uint64_t noise_seed = derive_seed(config.base_seed, kNoiseTag, n_i, snr_i, trial);

    SceneConfig scene_config = config.scene;
    scene_config.subarrays = subarrays;
    scene_config.seed = scene_seed;
    const Scene scene = generate_scene(scene_config);
    const std::vector<cdouble> truth = synthesize_channel(scene);

    PilotSnapshot snapshot;
    snapshot.transmit_power = snr_to_power(snr_db);
    const std::vector<cdouble> noise = complex_gaussian(truth.size(), noise_seed);
    const double amp = std::sqrt(snapshot.transmit_power);
    snapshot.samples.resize(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i)
      snapshot.samples[i] = amp * truth[i] + noise[i];

    for (std::size_t m_i = 0; m_i < methods; ++m_i) {
      TrialRecord record;
      record.method = config.methods[m_i];
      record.subarrays = subarrays;
      record.snr_db = snr_db;
      record.trial = static_cast<int>(trial);
      record.scene_seed = scene_seed;
      record.noise_seed = noise_seed;

      const auto start = std::chrono::steady_clock::now();
      switch (record.method) {
        case Method::least_squares: {
          const std::vector<cdouble> estimate = ls_estimate(snapshot);
          record.mse = mse_metric(truth, estimate, scene);
          break;
        }
        case Method::subarray_wise:
        case Method::scatterer_wise: {
          const EstimationResult est =
              record.method == Method::subarray_wise
                  ? subarray_wise_estimate(scene.geometry, snapshot, scene.bounds, config.params)
                  : scatterer_wise_estimate(scene.geometry, snapshot, scene.bounds,
                                            config.params);
          record.mse = mse_metric(truth, est.channel, scene);
          record.detections = detection_outcomes(scene, est.paths, config.detection_radius);
          record.truncated = est.truncated;
          record.timings = est.timings;
          break;
        }
      }
      record.elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      result.records[task * methods + m_i] = std::move(record);
    }
  };

  const auto workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.workers), tasks);
  if (workers <= 1) {
    for (std::size_t task = 0; task < tasks; ++task) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
      for (;;) {
        const std::size_t task = next.fetch_add(1);
        if (task >= tasks) return;
        try {
          run_task(task);
        } catch (...) {
          const std::scoped_lock lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Aggregate each (method, N, SNR) cell by pooling per-subarray MSE terms
  // and detection pairs across its trials.
  for (std::size_t m_i = 0; m_i < methods; ++m_i) {
    for (std::size_t n_i = 0; n_i < n_axis; ++n_i) {
      for (std::size_t snr_i = 0; snr_i < snr_axis; ++snr_i) {
        SweepCell cell;
        cell.method = config.methods[m_i];
        cell.subarrays = config.subarray_counts[n_i];
        cell.snr_db = config.snr_db[snr_i];
        cell.trials = config.trials;

        std::vector<double> terms;
        DetectionCount pooled;
        for (std::size_t trial = 0; trial < trials; ++trial) {
          const std::size_t task = (n_i * snr_axis + snr_i) * trials + trial;
          const TrialRecord& record = result.records[task * methods + m_i];
          for (const MseTerm& term : record.mse) terms.push_back(term.value);
          const DetectionCount count = count_detections(record.detections);
          pooled.detected += count.detected;
          pooled.total += count.total;
        }

        if (!terms.empty()) {
          double sum = 0.0;
          for (double v : terms) sum += v;
          cell.mean_mse = sum / static_cast<double>(terms.size());
          if (terms.size() > 1) {
            double ss = 0.0;
            for (double v : terms) ss += (v - cell.mean_mse) * (v - cell.mean_mse);
            const double variance = ss / static_cast<double>(terms.size() - 1);
            cell.se_mse = std::sqrt(variance / static_cast<double>(terms.size()));
          }
        }
        if (const auto ratio = pooled.ratio()) {
          cell.detection_ratio = *ratio;
          cell.se_detection =
              std::sqrt(*ratio * (1.0 - *ratio) / static_cast<double>(pooled.total));
        }
        result.cells.push_back(cell);
      }
    }
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string csv = "method,N,snr_db,mean_mse,se_mse,detection_ratio,se_detection,trials\n";
  for (const SweepCell& cell : result.cells) {
    csv += method_name(cell.method);
    csv += ',';
    csv += std::to_string(cell.subarrays);
    csv += ',';
    csv += format_double(cell.snr_db);
    csv += ',';
    csv += format_double(cell.mean_mse);
    csv += ',';
    csv += format_double(cell.se_mse);
    csv += ',';
    if (cell.detection_ratio) csv += format_double(*cell.detection_ratio);
    csv += ',';
    if (cell.se_detection) csv += format_double(*cell.se_detection);
    csv += ',';
    csv += std::to_string(cell.trials);
    csv += '\n';
  }
  return csv;
}

std::string records_to_jsonl(std::span<const TrialRecord> records, bool include_timings) {
  std::string lines;
  for (const TrialRecord& record : records) {
    nlohmann::json mse = nlohmann::json::array();
    for (const MseTerm& term : record.mse)
      mse.push_back({{"subarray", term.subarray}, {"value", term.value}});
    nlohmann::json detections = nlohmann::json::array();
    for (const PairDetection& d : record.detections)
      detections.push_back(
          {{"subarray", d.subarray}, {"scatterer", d.scatterer}, {"detected", d.detected}});
    nlohmann::json j{{"method", method_name(record.method)},
                     {"N", record.subarrays},
                     {"snr_db", record.snr_db},
                     {"trial", record.trial},
                     {"scene_seed", record.scene_seed},
                     {"noise_seed", record.noise_seed},
                     {"mse", std::move(mse)},
                     {"detections", std::move(detections)},
                     {"truncated", record.truncated}};
    if (include_timings) {
      j["timings"] = {{"noise_test", record.timings.noise_test},
                      {"coarse_search", record.timings.coarse_search},
                      {"fine_search", record.timings.fine_search},
                      {"amplitude", record.timings.amplitude},
                      {"support", record.timings.support},
                      {"elapsed_seconds", record.elapsed_seconds}};
    }
    lines += j.dump();
    lines += '\n';
  }
  return lines;
}

}  // namespace elaa
