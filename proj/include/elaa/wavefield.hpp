#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "elaa/geometry.hpp"
#include "elaa/scene.hpp"

namespace elaa {

// Distance from element m to a source point. All lengths are in wavelengths.
double element_distance(const ArrayGeometry& geometry, int m, Point source);

// Spherical-wavefront sample at element m: amplitude x/D_m, phase 2*pi*D_m.
cdouble element_response(const ArrayGeometry& geometry, int m, Point source);

std::vector<cdouble> array_response(const ArrayGeometry& geometry, Point source);

// Unit-modulus phase profile exp(j 2 pi D_m); the amplitude taper is dropped.
std::vector<cdouble> steering_phase(const ArrayGeometry& geometry, Point source);

// 0/1 element mask covering the listed subarrays.
std::vector<double> selection_vector(const ArrayGeometry& geometry, const SubarraySet& visible);

// Sum of per-scatterer responses, each masked to its visible subarrays.
std::vector<cdouble> synthesize_channel(const Scene& scene);

double snr_to_power(double snr_db);

struct PilotSnapshot {
  std::vector<cdouble> samples;
  double transmit_power = 1.0;

  bool operator==(const PilotSnapshot&) const = default;
};

// Unit-variance circular complex Gaussian draws (re and im each N(0, 1/2)).
std::vector<cdouble> complex_gaussian(std::size_t count, std::uint64_t seed);

// r = sqrt(P) h + w with unit-variance noise on every element.
PilotSnapshot observe_pilot(const Scene& scene, double transmit_power, std::uint64_t noise_seed);
PilotSnapshot observe_pilot_snr(const Scene& scene, double snr_db, std::uint64_t noise_seed);

nlohmann::json snapshot_to_json(const PilotSnapshot& snapshot);
PilotSnapshot snapshot_from_json(const nlohmann::json& j);
void save_snapshot(const PilotSnapshot& snapshot, const std::filesystem::path& path);
PilotSnapshot load_snapshot(const std::filesystem::path& path);

// Raw interleaved (re, im) doubles; the transmit power must be supplied on load.
void save_snapshot_binary(const PilotSnapshot& snapshot, const std::filesystem::path& path);
PilotSnapshot load_snapshot_binary(const std::filesystem::path& path, double transmit_power);

}  // namespace elaa
