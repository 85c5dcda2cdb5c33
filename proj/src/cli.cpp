#include "elaa/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "elaa/estimators.hpp"
#include "elaa/format.hpp"
#include "elaa/grid.hpp"
#include "elaa/run_config.hpp"
#include "elaa/scene.hpp"
#include "elaa/spatial_search.hpp"
#include "elaa/sweep.hpp"
#include "elaa/wavefield.hpp"

namespace elaa {
namespace {

constexpr std::uint64_t kEstimateNoiseTag = 0x6e015eULL;

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<Method> select_methods(const std::string& choice,
                                   const std::vector<Method>& configured) {
  if (choice.empty()) return configured;
  if (choice == "all")
    return {Method::subarray_wise, Method::scatterer_wise, Method::least_squares};
  return {method_from_name(choice)};
}

nlohmann::json channel_to_json(const std::vector<cdouble>& channel) {
  std::vector<double> re(channel.size());
  std::vector<double> im(channel.size());
  for (std::size_t i = 0; i < channel.size(); ++i) {
    re[i] = channel[i].real();
    im[i] = channel[i].imag();
  }
  return {{"channel_re", re}, {"channel_im", im}};
}

int cmd_pattern(const RunConfig& config) {
  const ArrayGeometry geometry(config.scene.elements, config.scene.subarrays,
                               config.scene.spacing);
  const SubarraySet visible = config.pattern.resolved_visible(geometry.subarrays());
  const std::vector<cdouble> response = array_response(geometry, config.pattern.source);
  const SearchGrid grid = coarse_grid(config.pattern.bounds, config.pattern.step);
  const std::vector<double> map = radiation_map(geometry, response, visible, grid);

  std::string csv = "x,y,power\n";
  std::size_t flat = 0;
  for (double x : grid.xs) {
    for (double y : grid.ys) {
      csv += format_double(x);
      csv += ',';
      csv += format_double(y);
      csv += ',';
      csv += format_double(map[flat++]);
      csv += '\n';
    }
  }
  write_text(std::filesystem::path(config.out_dir) / "pattern.csv", csv);
  return 0;
}

struct EstimateOptions {
  std::string snapshot_path;
  std::string snapshot_bin_path;
  double power = 0.0;     // 0 means derive from snr_db
  double snr_db = 20.0;
  std::uint64_t noise_seed = 0;
  bool noise_seed_set = false;
  std::string method_choice;
};

int cmd_estimate(const RunConfig& config, const EstimateOptions& options) {
  const ArrayGeometry geometry(config.scene.elements, config.scene.subarrays,
                               config.scene.spacing);
  const double power =
      options.power > 0.0 ? options.power : snr_to_power(options.snr_db);
  const std::filesystem::path out_dir(config.out_dir);

  PilotSnapshot snapshot;
  if (!options.snapshot_path.empty()) {
    snapshot = load_snapshot(options.snapshot_path);
  } else if (!options.snapshot_bin_path.empty()) {
    snapshot = load_snapshot_binary(options.snapshot_bin_path, power);
  } else {
    SceneConfig scene_config = config.scene;
    scene_config.seed = config.seed;
    const Scene scene = generate_scene(scene_config);
    const std::uint64_t noise_seed =
        options.noise_seed_set ? options.noise_seed
                               : derive_seed(config.seed, kEstimateNoiseTag, 0, 0, 0);
    snapshot = observe_pilot(scene, power, noise_seed);
    save_scene(scene, out_dir / "scene.json");
  }
  if (snapshot.samples.size() != static_cast<std::size_t>(geometry.elements()))
    throw std::invalid_argument("snapshot length does not match the configured geometry");

  for (Method method : select_methods(options.method_choice, config.methods)) {
    nlohmann::json j;
    switch (method) {
      case Method::least_squares:
        j = channel_to_json(ls_estimate(snapshot));
        break;
      case Method::subarray_wise:
        j = result_to_json(subarray_wise_estimate(geometry, snapshot, config.scene.bounds,
                                                  config.estimator),
                           config.timings);
        break;
      case Method::scatterer_wise:
        j = result_to_json(scatterer_wise_estimate(geometry, snapshot, config.scene.bounds,
                                                   config.estimator),
                           config.timings);
        break;
    }
    const std::string name = "estimate_" + std::string(method_name(method)) + ".json";
    write_text(out_dir / name, j.dump(2) + "\n");
  }
  return 0;
}

struct SweepOptions {
  std::vector<double> snr_db;
  std::vector<int> subarrays;
  int trials = 0;   // 0 means keep config value
  std::string method_choice;
};

int cmd_sweep(const RunConfig& config, const SweepOptions& options) {
  SweepConfig sweep = config.to_sweep();
  if (!options.snr_db.empty()) sweep.snr_db = options.snr_db;
  if (!options.subarrays.empty()) sweep.subarray_counts = options.subarrays;
  if (options.trials > 0) sweep.trials = options.trials;
  sweep.methods = select_methods(options.method_choice, sweep.methods);

  const SweepResult result = run_sweep(sweep);
  const std::filesystem::path out_dir(config.out_dir);
  write_text(out_dir / "sweep.csv", sweep_to_csv(result));
  write_text(out_dir / "trials.jsonl", records_to_jsonl(result.records, config.timings));
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Near-field array channel synthesis, hierarchical-grid sparse estimation "
               "and Monte-Carlo sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string out_dir;
  bool timings = false;
  app.add_option("--config", config_path, "JSON config file");
  auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
  auto* workers_opt = app.add_option("--workers", workers, "Override the worker count");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory");
  auto* timings_opt = app.add_flag("--timings", timings, "Include wall-clock timings in outputs");

  CLI::App* pattern_cmd =
      app.add_subcommand("pattern", "Write the correlation-power map of a masked source");
  double pattern_x = 0.0;
  double pattern_y = 0.0;
  std::vector<int> pattern_visible;
  double pattern_step = 0.0;
  auto* px_opt = pattern_cmd->add_option("--x", pattern_x, "Source x");
  auto* py_opt = pattern_cmd->add_option("--y", pattern_y, "Source y");
  auto* pv_opt = pattern_cmd->add_option("--visible", pattern_visible, "Visible subarrays")
                     ->delimiter(',');
  auto* ps_opt = pattern_cmd->add_option("--step", pattern_step, "Grid step");

  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "Estimate one snapshot and write the paths and channel");
  EstimateOptions estimate_options;
  estimate_cmd->add_option("--snapshot", estimate_options.snapshot_path,
                           "JSON snapshot to estimate instead of synthesizing one");
  estimate_cmd->add_option("--snapshot-bin", estimate_options.snapshot_bin_path,
                           "Raw interleaved re/im doubles; needs --power or --snr-db");
  estimate_cmd->add_option("--power", estimate_options.power, "Transmit power (linear)");
  estimate_cmd->add_option("--snr-db", estimate_options.snr_db, "SNR in dB (power = 10^(SNR/10))");
  auto* noise_opt =
      estimate_cmd->add_option("--noise-seed", estimate_options.noise_seed, "Noise seed");
  estimate_cmd->add_option("--method", estimate_options.method_choice,
                           "subarray, scatterer, ls or all");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a Monte-Carlo sweep and write CSV");
  SweepOptions sweep_options;
  sweep_cmd->add_option("--snr-db", sweep_options.snr_db, "SNR axis in dB")->delimiter(',');
  sweep_cmd->add_option("--subarrays", sweep_options.subarrays, "Subarray-count axis")
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep_options.trials, "Trials per point");
  sweep_cmd->add_option("--method", sweep_options.method_choice,
                        "subarray, scatterer, ls or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (*seed_opt) config.seed = seed;
    if (*workers_opt) config.workers = workers;
    if (*out_opt) config.out_dir = out_dir;
    if (*timings_opt) config.timings = true;
    if (*px_opt) config.pattern.source.x = pattern_x;
    if (*py_opt) config.pattern.source.y = pattern_y;
    if (*pv_opt) config.pattern.visible = pattern_visible;
    if (*ps_opt) config.pattern.step = pattern_step;
    estimate_options.noise_seed_set = noise_opt->count() > 0;
    config.validate();
    std::filesystem::create_directories(config.out_dir);

    if (pattern_cmd->parsed()) return cmd_pattern(config);
    if (estimate_cmd->parsed()) return cmd_estimate(config, estimate_options);
    if (sweep_cmd->parsed()) return cmd_sweep(config, sweep_options);
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace elaa
