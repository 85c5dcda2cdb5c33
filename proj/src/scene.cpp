#include "elaa/scene.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace elaa {

void RegionBounds::validate() const {
  if (!(x_min > 0.0)) throw std::invalid_argument("bounds: x_min must be > 0");
  validate_allowing_zero_x();
}

void RegionBounds::validate_allowing_zero_x() const {
  if (!(x_min >= 0.0)) throw std::invalid_argument("bounds: x_min must be >= 0");
  if (!(x_min < x_max)) throw std::invalid_argument("bounds: x_min must be < x_max");
  if (!(y_min < y_max)) throw std::invalid_argument("bounds: y_min must be < y_max");
}

std::vector<int> Scene::subarray_view(int n) const {
  if (n < 1 || n > geometry.subarrays())
    throw std::out_of_range("subarray_view: index outside 1..N");
  std::vector<int> seen;
  for (std::size_t s = 0; s < scatterers.size(); ++s)
    if (scatterers[s].visible.contains(n)) seen.push_back(static_cast<int>(s));
  return seen;
}

void Scene::validate() const {
  bounds.validate();
  if (scatterers.empty()) throw std::invalid_argument("scene: needs at least one scatterer");
  for (const Scatterer& s : scatterers) {
    if (!(s.position.x > bounds.x_min && s.position.x < bounds.x_max &&
          s.position.y > bounds.y_min && s.position.y < bounds.y_max))
      throw std::invalid_argument("scene: scatterer position outside bounds");
    if (s.visible.empty()) throw std::invalid_argument("scene: scatterer with empty visible set");
    require_within(s.visible, geometry.subarrays());
  }
}

int SceneConfig::resolved_visible_subarrays() const {
  return visible_subarrays == 0 ? std::max(subarrays / 2, 1) : visible_subarrays;
}

void SceneConfig::validate() const {
  ArrayGeometry probe(elements, subarrays, spacing);
  (void)probe;
  bounds.validate();
  if (scatterers < 1) throw std::invalid_argument("scene: scatterer count must be >= 1");
  const int ns = resolved_visible_subarrays();
  if (ns < 1 || ns > subarrays)
    throw std::invalid_argument("scene: visible_subarrays must lie in 1..subarrays");
  if (!(gain_power_min > 0.0) || !(gain_power_max >= gain_power_min))
    throw std::invalid_argument("scene: gain power range must satisfy 0 < min <= max");
  if (min_separation < 0.0) throw std::invalid_argument("scene: min_separation must be >= 0");
  if (max_position_retries < 1)
    throw std::invalid_argument("scene: max_position_retries must be >= 1");
}

Scene generate_scene(const SceneConfig& config) {
  config.validate();
  ArrayGeometry geometry(config.elements, config.subarrays, config.spacing);
  const int ns = config.resolved_visible_subarrays();

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> draw_x(config.bounds.x_min, config.bounds.x_max);
  std::uniform_real_distribution<double> draw_y(config.bounds.y_min, config.bounds.y_max);
  std::uniform_real_distribution<double> draw_power(config.gain_power_min, config.gain_power_max);
  std::uniform_real_distribution<double> draw_phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> draw_start(1, config.subarrays - ns + 1);

  std::vector<Scatterer> scatterers;
  scatterers.reserve(static_cast<std::size_t>(config.scatterers));
  for (int s = 0; s < config.scatterers; ++s) {
    Point pos;
    bool placed = false;
    for (int attempt = 0; attempt < config.max_position_retries; ++attempt) {
      pos = {draw_x(rng), draw_y(rng)};
      bool clear = true;
      for (const Scatterer& other : scatterers) {
        const double dist = std::hypot(pos.x - other.position.x, pos.y - other.position.y);
        if (dist < config.min_separation) {
          clear = false;
          break;
        }
      }
      if (clear) {
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::runtime_error("generate_scene: exceeded " +
                               std::to_string(config.max_position_retries) +
                               " retries while enforcing the minimum scatterer separation");

    const double power = draw_power(rng);
    const double phase = draw_phase(rng);
    const int start = draw_start(rng);
    SubarraySet visible;
    for (int k = 0; k < ns; ++k) visible.insert(start + k);
    scatterers.push_back({pos, std::polar(std::sqrt(power), phase), visible});
  }

  Scene scene{geometry, config.bounds, std::move(scatterers), config.seed};
  scene.validate();
  return scene;
}

nlohmann::json scene_to_json(const Scene& scene) {
  nlohmann::json j;
  j["geometry"] = {{"elements", scene.geometry.elements()},
                   {"subarrays", scene.geometry.subarrays()},
                   {"spacing", scene.geometry.spacing()}};
  j["bounds"] = {{"x_min", scene.bounds.x_min},
                 {"x_max", scene.bounds.x_max},
                 {"y_min", scene.bounds.y_min},
                 {"y_max", scene.bounds.y_max}};
  j["seed"] = scene.rng_seed;
  nlohmann::json list = nlohmann::json::array();
  for (const Scatterer& s : scene.scatterers) {
    list.push_back({{"x", s.position.x},
                    {"y", s.position.y},
                    {"gain_re", s.gain.real()},
                    {"gain_im", s.gain.imag()},
                    {"visible", s.visible.indices()}});
  }
  j["scatterers"] = std::move(list);
  return j;
}

Scene scene_from_json(const nlohmann::json& j) {
  const auto& g = j.at("geometry");
  ArrayGeometry geometry(g.at("elements").get<int>(), g.at("subarrays").get<int>(),
                         g.at("spacing").get<double>());
  const auto& b = j.at("bounds");
  RegionBounds bounds{b.at("x_min").get<double>(), b.at("x_max").get<double>(),
                      b.at("y_min").get<double>(), b.at("y_max").get<double>()};
  std::vector<Scatterer> scatterers;
  for (const auto& item : j.at("scatterers")) {
    Scatterer s{{item.at("x").get<double>(), item.at("y").get<double>()},
                {item.at("gain_re").get<double>(), item.at("gain_im").get<double>()},
                SubarraySet(item.at("visible").get<std::vector<int>>())};
    scatterers.push_back(std::move(s));
  }
  Scene scene{geometry, bounds, std::move(scatterers), j.value("seed", std::uint64_t{0})};
  scene.validate();
  return scene;
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_scene: cannot open " + path.string());
  out << scene_to_json(scene).dump(2) << '\n';
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_scene: cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  return scene_from_json(j);
}

}  // namespace elaa
