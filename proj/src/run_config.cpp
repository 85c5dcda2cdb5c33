#include "elaa/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace elaa {
namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                  const char* where) {
  if (!j.is_object())
    throw std::invalid_argument(std::string("config: '") + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("config: unknown key '" + key + "' in '" + where + "'");
  }
}

RegionBounds parse_bounds(const nlohmann::json& j, RegionBounds bounds, const char* where) {
  require_keys(j, {"x_min", "x_max", "y_min", "y_max"}, where);
  bounds.x_min = j.value("x_min", bounds.x_min);
  bounds.x_max = j.value("x_max", bounds.x_max);
  bounds.y_min = j.value("y_min", bounds.y_min);
  bounds.y_max = j.value("y_max", bounds.y_max);
  return bounds;
}

nlohmann::json bounds_to_json(const RegionBounds& b) {
  return {{"x_min", b.x_min}, {"x_max", b.x_max}, {"y_min", b.y_min}, {"y_max", b.y_max}};
}

void parse_scene(const nlohmann::json& j, SceneConfig& scene) {
  require_keys(j,
               {"elements", "subarrays", "spacing", "scatterers", "visible_subarrays",
                "gain_power_min", "gain_power_max", "min_separation", "max_position_retries",
                "bounds"},
               "scene");
  scene.elements = j.value("elements", scene.elements);
  scene.subarrays = j.value("subarrays", scene.subarrays);
  scene.spacing = j.value("spacing", scene.spacing);
  scene.scatterers = j.value("scatterers", scene.scatterers);
  scene.visible_subarrays = j.value("visible_subarrays", scene.visible_subarrays);
  scene.gain_power_min = j.value("gain_power_min", scene.gain_power_min);
  scene.gain_power_max = j.value("gain_power_max", scene.gain_power_max);
  scene.min_separation = j.value("min_separation", scene.min_separation);
  scene.max_position_retries = j.value("max_position_retries", scene.max_position_retries);
  if (j.contains("bounds")) scene.bounds = parse_bounds(j.at("bounds"), scene.bounds, "scene.bounds");
}

void parse_estimator(const nlohmann::json& j, EstimatorParams& params) {
  require_keys(j,
               {"coarse_step", "fine_step", "fine_half_x", "fine_half_y", "energy_fraction",
                "gate_scale", "false_alarm", "max_iterations", "threads"},
               "estimator");
  params.coarse_step = j.value("coarse_step", params.coarse_step);
  params.fine_step = j.value("fine_step", params.fine_step);
  params.fine_half_x = j.value("fine_half_x", params.fine_half_x);
  params.fine_half_y = j.value("fine_half_y", params.fine_half_y);
  params.energy_fraction = j.value("energy_fraction", params.energy_fraction);
  params.gate_scale = j.value("gate_scale", params.gate_scale);
  params.stopping.false_alarm = j.value("false_alarm", params.stopping.false_alarm);
  params.stopping.max_iterations = j.value("max_iterations", params.stopping.max_iterations);
  params.threads = j.value("threads", params.threads);
}

void parse_sweep(const nlohmann::json& j, RunConfig& config) {
  require_keys(j, {"subarray_counts", "snr_db", "trials", "methods", "detection_radius"},
               "sweep");
  if (j.contains("subarray_counts"))
    config.subarray_counts = j.at("subarray_counts").get<std::vector<int>>();
  if (j.contains("snr_db")) config.snr_db = j.at("snr_db").get<std::vector<double>>();
  config.trials = j.value("trials", config.trials);
  if (j.contains("methods")) {
    config.methods.clear();
    for (const auto& name : j.at("methods"))
      config.methods.push_back(method_from_name(name.get<std::string>()));
  }
  config.detection_radius = j.value("detection_radius", config.detection_radius);
}

void parse_pattern(const nlohmann::json& j, PatternConfig& pattern) {
  require_keys(j, {"x", "y", "visible", "step", "bounds"}, "pattern");
  pattern.source.x = j.value("x", pattern.source.x);
  pattern.source.y = j.value("y", pattern.source.y);
  if (j.contains("visible")) pattern.visible = j.at("visible").get<std::vector<int>>();
  pattern.step = j.value("step", pattern.step);
  if (j.contains("bounds"))
    pattern.bounds = parse_bounds(j.at("bounds"), pattern.bounds, "pattern.bounds");
}

}  // namespace

SubarraySet PatternConfig::resolved_visible(int subarrays) const {
  if (visible.empty()) return SubarraySet::full(subarrays);
  return SubarraySet(visible);
}

void PatternConfig::validate(int subarrays) const {
  bounds.validate_allowing_zero_x();
  if (!(step > 0.0)) throw std::invalid_argument("pattern: step must be > 0");
  if (!(source.x > 0.0)) throw std::invalid_argument("pattern: source x must be > 0");
  require_within(resolved_visible(subarrays), subarrays);
}

SweepConfig RunConfig::to_sweep() const {
  SweepConfig sweep;
  sweep.subarray_counts = subarray_counts;
  sweep.snr_db = snr_db;
  sweep.trials = trials;
  sweep.methods = methods;
  sweep.scene = scene;
  sweep.params = estimator;
  sweep.detection_radius = detection_radius;
  sweep.base_seed = seed;
  sweep.workers = workers;
  return sweep;
}

void RunConfig::validate() const {
  scene.validate();
  estimator.validate();
  if (subarray_counts.empty()) throw std::invalid_argument("sweep: subarray_counts is empty");
  if (snr_db.empty()) throw std::invalid_argument("sweep: snr_db is empty");
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (methods.empty()) throw std::invalid_argument("sweep: methods is empty");
  if (!(detection_radius > 0.0))
    throw std::invalid_argument("sweep: detection_radius must be > 0");
  if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
  if (out_dir.empty()) throw std::invalid_argument("config: out_dir is empty");
  pattern.validate(scene.subarrays);
}

RunConfig parse_config(const std::string& text) {
  const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(blank ? std::string("{}") : text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  require_keys(j, {"scene", "estimator", "sweep", "pattern", "seed", "workers", "out_dir",
                   "timings"},
               "config");
  RunConfig config;
  if (j.contains("scene")) parse_scene(j.at("scene"), config.scene);
  if (j.contains("estimator")) parse_estimator(j.at("estimator"), config.estimator);
  if (j.contains("sweep")) parse_sweep(j.at("sweep"), config);
  if (j.contains("pattern")) parse_pattern(j.at("pattern"), config.pattern);
  config.seed = j.value("seed", config.seed);
  config.workers = j.value("workers", config.workers);
  config.out_dir = j.value("out_dir", config.out_dir);
  config.timings = j.value("timings", config.timings);
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_config: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

nlohmann::json config_to_json(const RunConfig& config) {
  std::vector<std::string> method_names;
  method_names.reserve(config.methods.size());
  for (Method m : config.methods) method_names.emplace_back(method_name(m));
  return {{"scene",
           {{"elements", config.scene.elements},
            {"subarrays", config.scene.subarrays},
            {"spacing", config.scene.spacing},
            {"scatterers", config.scene.scatterers},
            {"visible_subarrays", config.scene.visible_subarrays},
            {"gain_power_min", config.scene.gain_power_min},
            {"gain_power_max", config.scene.gain_power_max},
            {"min_separation", config.scene.min_separation},
            {"max_position_retries", config.scene.max_position_retries},
            {"bounds", bounds_to_json(config.scene.bounds)}}},
          {"estimator",
           {{"coarse_step", config.estimator.coarse_step},
            {"fine_step", config.estimator.fine_step},
            {"fine_half_x", config.estimator.fine_half_x},
            {"fine_half_y", config.estimator.fine_half_y},
            {"energy_fraction", config.estimator.energy_fraction},
            {"gate_scale", config.estimator.gate_scale},
            {"false_alarm", config.estimator.stopping.false_alarm},
            {"max_iterations", config.estimator.stopping.max_iterations},
            {"threads", config.estimator.threads}}},
          {"sweep",
           {{"subarray_counts", config.subarray_counts},
            {"snr_db", config.snr_db},
            {"trials", config.trials},
            {"methods", method_names},
            {"detection_radius", config.detection_radius}}},
          {"pattern",
           {{"x", config.pattern.source.x},
            {"y", config.pattern.source.y},
            {"visible", config.pattern.visible},
            {"step", config.pattern.step},
            {"bounds", bounds_to_json(config.pattern.bounds)}}},
          {"seed", config.seed},
          {"workers", config.workers},
          {"out_dir", config.out_dir},
          {"timings", config.timings}};
}

}  // namespace elaa
