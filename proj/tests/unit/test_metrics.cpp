#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "elaa/metrics.hpp"
#include "elaa/wavefield.hpp"

using namespace elaa;

namespace {

Scene half_visible_scene() {
  Scene scene{ArrayGeometry(64, 4, 0.5), RegionBounds{}, {}, 0};
  scene.scatterers.push_back({{100.0, 0.0}, {0.9, 0.1}, SubarraySet{1, 2}});
  return scene;
}

}  // namespace

TEST_CASE("perfect estimate scores zero error") {
  const Scene scene = half_visible_scene();
  const auto h = synthesize_channel(scene);
  const auto terms = mse_metric(h, h, scene);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].subarray == 1);
  CHECK(terms[1].subarray == 2);
  for (const MseTerm& t : terms) CHECK(t.value == 0.0);
}

TEST_CASE("an all-zero estimate scores unit relative error") {
  const Scene scene = half_visible_scene();
  const auto h = synthesize_channel(scene);
  const std::vector<cdouble> zero(h.size(), cdouble{0.0, 0.0});
  for (const MseTerm& t : mse_metric(h, zero, scene)) {
    CHECK(t.value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("unseen subarrays are excluded from the error") {
  const Scene scene = half_visible_scene();
  const auto h = synthesize_channel(scene);
  // corrupt only the unseen half; the metric must not notice
  auto estimate = h;
  for (std::size_t m = 32; m < 64; ++m) estimate[m] = cdouble{5.0, -5.0};
  for (const MseTerm& t : mse_metric(h, estimate, scene)) {
    CHECK(t.value == 0.0);
    CHECK(t.subarray <= 2);
  }
}

TEST_CASE("a seen subarray with zero reference energy is a logic error") {
  Scene scene = half_visible_scene();
  scene.scatterers[0].gain = cdouble{0.0, 0.0};
  const auto h = synthesize_channel(scene);   // identically zero
  CHECK_THROWS_AS(mse_metric(h, h, scene), std::logic_error);
}

TEST_CASE("mse metric validates channel lengths") {
  const Scene scene = half_visible_scene();
  const auto h = synthesize_channel(scene);
  const std::vector<cdouble> short_vec(10);
  CHECK_THROWS_AS(mse_metric(short_vec, h, scene), std::invalid_argument);
  CHECK_THROWS_AS(mse_metric(h, short_vec, scene), std::invalid_argument);
}

TEST_CASE("detection needs proximity and subarray coverage") {
  const Scene scene = half_visible_scene();

  // close enough and covering subarray 1 only
  std::vector<EstimatedPath> paths{{{105.0, 0.0}, {1.0, 0.0}, SubarraySet{1}}};
  auto outcomes = detection_outcomes(scene, paths, 10.0);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].subarray == 1);
  CHECK(outcomes[0].scatterer == 0);
  CHECK(outcomes[0].detected);
  CHECK(outcomes[1].subarray == 2);
  CHECK(!outcomes[1].detected);
  CHECK(detection_metric(scene, paths, 10.0).ratio() == 0.5);

  // covers both subarrays but sits 12 wavelengths away
  paths = {{{100.0, 12.0}, {1.0, 0.0}, SubarraySet{1, 2}}};
  CHECK(detection_metric(scene, paths, 10.0).ratio() == 0.0);
  // a duplicate close path rescues both pairs
  paths.push_back({{100.0, -4.0}, {1.0, 0.0}, SubarraySet{1, 2}});
  CHECK(detection_metric(scene, paths, 10.0).ratio() == 1.0);

  // the boundary itself is outside an open radius
  paths = {{{110.0, 0.0}, {1.0, 0.0}, SubarraySet{1, 2}}};
  CHECK(detection_metric(scene, paths, 10.0).ratio() == 0.0);
  CHECK(detection_metric(scene, paths, 10.0001).ratio() == 1.0);

  CHECK(detection_metric(scene, {}, 10.0).ratio() == 0.0);
  CHECK_THROWS_AS(detection_outcomes(scene, paths, 0.0), std::invalid_argument);
}

TEST_CASE("widening the radius never loses a detection") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> ux(20.0, 200.0);
  std::uniform_real_distribution<double> uy(-600.0, 600.0);
  std::uniform_int_distribution<int> sub(1, 4);

  for (int round = 0; round < 50; ++round) {
    Scene scene{ArrayGeometry(64, 4, 0.5), RegionBounds{}, {}, 0};
    scene.scatterers.push_back({{ux(rng), uy(rng)}, {1.0, 0.0},
                                SubarraySet{sub(rng)}});
    scene.scatterers.push_back({{ux(rng), uy(rng)}, {1.0, 0.0},
                                SubarraySet{sub(rng), 4}});
    std::vector<EstimatedPath> paths;
    for (int i = 0; i < 3; ++i) {
      paths.push_back({{ux(rng), uy(rng)}, {1.0, 0.0}, SubarraySet{sub(rng)}});
    }
    const auto narrow = detection_outcomes(scene, paths, 10.0);
    const auto wide = detection_outcomes(scene, paths, 20.0);
    REQUIRE(narrow.size() == wide.size());
    for (std::size_t i = 0; i < narrow.size(); ++i) {
      CHECK(narrow[i].subarray == wide[i].subarray);
      CHECK(narrow[i].scatterer == wide[i].scatterer);
      if (narrow[i].detected) CHECK(wide[i].detected);
    }
  }
}

TEST_CASE("detection counts pool across outcomes") {
  std::vector<PairDetection> outcomes{{1, 0, true}, {2, 0, false}, {3, 1, true}};
  const DetectionCount count = count_detections(outcomes);
  CHECK(count.detected == 2);
  CHECK(count.total == 3);
  CHECK(count.ratio() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const DetectionCount empty = count_detections({});
  CHECK(empty.total == 0);
  CHECK(!empty.ratio().has_value());
}
