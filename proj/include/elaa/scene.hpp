#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "elaa/geometry.hpp"

#include "json.hpp"

namespace elaa {

/// Rectangle bounding the region where scatterers may lie, wavelengths.
struct RegionBounds {
  double x_min = 20.0;
  double x_max = 200.0;
  double y_min = -600.0;
  double y_max = 600.0;

  /// Estimation-grade bounds: 0 < x_min < x_max and y_min < y_max.
  void validate() const;
  /// Pattern maps may start at x = 0, where steering phases are still defined.
  void validate_allowing_zero_x() const;

  friend bool operator==(const RegionBounds&, const RegionBounds&) = default;
};

/// Last-hop reflection point with its complex gain and the set of subarrays
/// that receive its energy.
struct Scatterer {
  Point position;
  cdouble gain;
  SubarraySet visible;

  friend bool operator==(const Scatterer&, const Scatterer&) = default;
};

struct Scene {
  ArrayGeometry geometry;
  RegionBounds bounds;
  std::vector<Scatterer> scatterers;
  std::uint64_t rng_seed = 0;

  /// 0-based indices of the scatterers visible from subarray n (1-based).
  /// May be empty: a subarray need not see any scatterer.
  std::vector<int> subarray_view(int n) const;

  void validate() const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct SceneConfig {
  int elements = 1024;
  int subarrays = 4;
  double spacing = 0.5;
  int scatterers = 2;
  int visible_subarrays = 0;  // 0 resolves to subarrays / 2
  double gain_power_min = 0.5;
  double gain_power_max = 1.0;
  double min_separation = 20.0;
  int max_position_retries = 1000;
  RegionBounds bounds;
  std::uint64_t seed = 0;

  int resolved_visible_subarrays() const;
  void validate() const;

  friend bool operator==(const SceneConfig&, const SceneConfig&) = default;
};

/// Draws scatterer positions uniformly over the bounds (rejecting pairs
/// closer than min_separation), gain powers uniformly over the configured
/// range with uniform phase, and a contiguous visible block of subarrays
/// with uniformly random start. Pure function of the config, seed included.
Scene generate_scene(const SceneConfig& config);

nlohmann::json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& j);
void save_scene(const Scene& scene, const std::filesystem::path& path);
Scene load_scene(const std::filesystem::path& path);

}  // namespace elaa
