#include <functional>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "elaa/run_config.hpp"

using namespace elaa;

namespace {

bool error_mentions(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const std::exception& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("blank input yields the default configuration") {
  const RunConfig defaults;
  CHECK(parse_config("") == defaults);
  CHECK(parse_config("   \n\t") == defaults);
  CHECK(parse_config("{}") == defaults);

  CHECK(defaults.scene.elements == 1024);
  CHECK(defaults.scene.subarrays == 4);
  CHECK(defaults.scene.spacing == 0.5);
  CHECK(defaults.scene.scatterers == 2);
  CHECK(defaults.estimator.coarse_step == 4.0);
  CHECK(defaults.estimator.fine_step == 0.1);
  CHECK(defaults.estimator.energy_fraction == 0.5);
  CHECK(defaults.estimator.gate_scale == 0.8);
  CHECK(defaults.estimator.stopping.false_alarm == 0.01);
  CHECK(defaults.estimator.stopping.max_iterations == 20);
  CHECK(defaults.snr_db == std::vector<double>{10.0, 15.0, 20.0, 25.0});
  CHECK(defaults.subarray_counts == std::vector<int>{4});
  CHECK(defaults.trials == 50);
  CHECK(defaults.detection_radius == 10.0);
  CHECK(defaults.pattern.source == Point{120.0, 120.0});
  CHECK(defaults.pattern.step == 1.0);
  CHECK(defaults.pattern.bounds == RegionBounds{0.0, 200.0, -600.0, 600.0});
}

TEST_CASE("explicit fields override the defaults") {
  const std::string text = R"({
    "scene": {"elements": 256, "subarrays": 8, "scatterers": 3,
              "bounds": {"x_min": 30, "x_max": 150, "y_min": -100, "y_max": 100}},
    "estimator": {"coarse_step": 2.0, "fine_step": 0.05, "false_alarm": 0.02,
                  "max_iterations": 7, "threads": 2},
    "sweep": {"subarray_counts": [8], "snr_db": [5, 10], "trials": 4,
              "methods": ["ls", "scatterer"], "detection_radius": 6.0},
    "pattern": {"x": 80.0, "y": -40.0, "visible": [2, 3], "step": 2.0},
    "seed": 123,
    "workers": 2,
    "out_dir": "results",
    "timings": true
  })";
  const RunConfig config = parse_config(text);
  CHECK(config.scene.elements == 256);
  CHECK(config.scene.subarrays == 8);
  CHECK(config.scene.scatterers == 3);
  CHECK(config.scene.bounds == RegionBounds{30.0, 150.0, -100.0, 100.0});
  CHECK(config.estimator.coarse_step == 2.0);
  CHECK(config.estimator.fine_step == 0.05);
  CHECK(config.estimator.stopping.false_alarm == 0.02);
  CHECK(config.estimator.stopping.max_iterations == 7);
  CHECK(config.estimator.threads == 2);
  CHECK(config.subarray_counts == std::vector<int>{8});
  CHECK(config.snr_db == std::vector<double>{5.0, 10.0});
  CHECK(config.trials == 4);
  CHECK(config.methods ==
        std::vector<Method>{Method::least_squares, Method::scatterer_wise});
  CHECK(config.detection_radius == 6.0);
  CHECK(config.pattern.source == Point{80.0, -40.0});
  CHECK(config.pattern.visible == std::vector<int>{2, 3});
  CHECK(config.seed == 123);
  CHECK(config.workers == 2);
  CHECK(config.out_dir == "results");
  CHECK(config.timings);
}

TEST_CASE("configuration survives a JSON round trip") {
  RunConfig config;
  config.scene.elements = 512;
  config.scene.subarrays = 8;
  config.estimator.gate_scale = 0.6;
  config.trials = 9;
  config.methods = {Method::scatterer_wise};
  config.seed = 5;
  config.timings = true;
  const RunConfig back = parse_config(config_to_json(config).dump());
  CHECK(back == config);

  CHECK(parse_config(config_to_json(RunConfig{}).dump()) == RunConfig{});
}

TEST_CASE("unknown keys are rejected with their name and location") {
  CHECK(error_mentions([] { parse_config(R"({"bogus": 1})"); }, "bogus"));
  CHECK(error_mentions([] { parse_config(R"({"scene": {"elemnts": 64}})"); }, "elemnts"));
  CHECK(error_mentions([] { parse_config(R"({"scene": {"elemnts": 64}})"); }, "scene"));
  CHECK(error_mentions(
      [] { parse_config(R"({"estimator": {"gate": 0.5}})"); }, "gate"));
  CHECK(error_mentions([] { parse_config(R"({"sweep": {"snrs": [1]}})"); }, "snrs"));
  CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), std::invalid_argument);
}

TEST_CASE("malformed or invalid configs fail with context") {
  CHECK_THROWS_AS(parse_config("{not json"), std::invalid_argument);
  CHECK(error_mentions([] { parse_config("{not json"); }, "config"));

  CHECK(error_mentions(
      [] { parse_config(R"({"estimator": {"gate_scale": 1.5}})"); }, "gate_scale"));
  CHECK(error_mentions(
      [] { parse_config(R"({"estimator": {"energy_fraction": 0.0}})"); }, "energy_fraction"));
  CHECK(error_mentions([] { parse_config(R"({"sweep": {"trials": 0}})"); }, "trials"));
  CHECK(error_mentions(
      [] { parse_config(R"({"scene": {"subarrays": 3, "elements": 64}})"); }, "divide"));
  CHECK(error_mentions([] { parse_config(R"({"workers": 0})"); }, "workers"));
  CHECK(error_mentions(
      [] { parse_config(R"({"sweep": {"methods": ["omp"]}})"); }, "omp"));
}

TEST_CASE("pattern settings are validated against the scene geometry") {
  CHECK_THROWS_AS(parse_config(R"({"pattern": {"step": 0}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"pattern": {"x": -5.0}})"), std::invalid_argument);
  // subarray index above the configured count
  CHECK_THROWS_AS(parse_config(R"({"pattern": {"visible": [9]}})"), std::domain_error);

  const RunConfig config = parse_config(R"({"pattern": {"visible": [1, 3]}})");
  CHECK(config.pattern.resolved_visible(4) == SubarraySet{1, 3});
  CHECK(RunConfig{}.pattern.resolved_visible(4) == SubarraySet::full(4));
}

TEST_CASE("sweep conversion copies the shared fields") {
  RunConfig config;
  config.scene.elements = 512;
  config.trials = 7;
  config.seed = 42;
  config.workers = 3;
  config.methods = {Method::least_squares};
  const SweepConfig sweep = config.to_sweep();
  CHECK(sweep.scene.elements == 512);
  CHECK(sweep.trials == 7);
  CHECK(sweep.base_seed == 42);
  CHECK(sweep.workers == 3);
  CHECK(sweep.methods == std::vector<Method>{Method::least_squares});
  CHECK(sweep.detection_radius == 10.0);
}
