#include "elaa/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>

namespace elaa {

double element_distance(const ArrayGeometry& geometry, int m, Point source) {
  return std::hypot(source.x, source.y - geometry.element_y(m));
}

cdouble element_response(const ArrayGeometry& geometry, int m, Point source) {
  const double dist = element_distance(geometry, m, source);
  const double phase = 2.0 * std::numbers::pi * dist;
  return (source.x / dist) * cdouble{std::cos(phase), std::sin(phase)};
}

std::vector<cdouble> array_response(const ArrayGeometry& geometry, Point source) {
  std::vector<cdouble> a(static_cast<std::size_t>(geometry.elements()));
  for (int m = 1; m <= geometry.elements(); ++m)
    a[static_cast<std::size_t>(m - 1)] = element_response(geometry, m, source);
  return a;
}

std::vector<cdouble> steering_phase(const ArrayGeometry& geometry, Point source) {
  std::vector<cdouble> b(static_cast<std::size_t>(geometry.elements()));
  for (int m = 1; m <= geometry.elements(); ++m) {
    const double phase = 2.0 * std::numbers::pi * element_distance(geometry, m, source);
    b[static_cast<std::size_t>(m - 1)] = {std::cos(phase), std::sin(phase)};
  }
  return b;
}

std::vector<double> selection_vector(const ArrayGeometry& geometry, const SubarraySet& visible) {
  require_within(visible, geometry.subarrays());
  std::vector<double> p(static_cast<std::size_t>(geometry.elements()), 0.0);
  for (int n : visible) {
    const auto [lo, hi] = geometry.subarray_span(n);
    std::fill(p.begin() + lo, p.begin() + hi, 1.0);
  }
  return p;
}

std::vector<cdouble> synthesize_channel(const Scene& scene) {
  scene.validate();
  std::vector<cdouble> h(static_cast<std::size_t>(scene.geometry.elements()));
  for (const Scatterer& s : scene.scatterers) {
    for (int n : s.visible) {
      const auto [lo, hi] = scene.geometry.subarray_span(n);
      for (int i = lo; i < hi; ++i)
        h[static_cast<std::size_t>(i)] +=
            s.gain * element_response(scene.geometry, i + 1, s.position);
    }
  }
  return h;
}

double snr_to_power(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

std::vector<cdouble> complex_gaussian(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> component(0.0, std::sqrt(0.5));
  std::vector<cdouble> w(count);
  for (cdouble& v : w) {
    const double re = component(rng);
    const double im = component(rng);
    v = {re, im};
  }
  return w;
}

PilotSnapshot observe_pilot(const Scene& scene, double transmit_power, std::uint64_t noise_seed) {
  if (!(transmit_power > 0.0))
    throw std::invalid_argument("observe_pilot: transmit power must be > 0");
  const std::vector<cdouble> h = synthesize_channel(scene);
  const std::vector<cdouble> w = complex_gaussian(h.size(), noise_seed);
  const double amp = std::sqrt(transmit_power);
  PilotSnapshot snap;
  snap.transmit_power = transmit_power;
  snap.samples.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) snap.samples[i] = amp * h[i] + w[i];
  return snap;
}

PilotSnapshot observe_pilot_snr(const Scene& scene, double snr_db, std::uint64_t noise_seed) {
  return observe_pilot(scene, snr_to_power(snr_db), noise_seed);
}

nlohmann::json snapshot_to_json(const PilotSnapshot& snapshot) {
  std::vector<double> re(snapshot.samples.size());
  std::vector<double> im(snapshot.samples.size());
  for (std::size_t i = 0; i < snapshot.samples.size(); ++i) {
    re[i] = snapshot.samples[i].real();
    im[i] = snapshot.samples[i].imag();
  }
  return {{"transmit_power", snapshot.transmit_power}, {"re", re}, {"im", im}};
}

PilotSnapshot snapshot_from_json(const nlohmann::json& j) {
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size())
    throw std::invalid_argument("snapshot: re and im lengths differ");
  PilotSnapshot snap;
  snap.transmit_power = j.at("transmit_power").get<double>();
  if (!(snap.transmit_power > 0.0))
    throw std::invalid_argument("snapshot: transmit power must be > 0");
  snap.samples.resize(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) snap.samples[i] = {re[i], im[i]};
  return snap;
}

void save_snapshot(const PilotSnapshot& snapshot, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_snapshot: cannot open " + path.string());
  out << snapshot_to_json(snapshot).dump(2) << '\n';
}

PilotSnapshot load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_snapshot: cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  return snapshot_from_json(j);
}

void save_snapshot_binary(const PilotSnapshot& snapshot, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_snapshot_binary: cannot open " + path.string());
  for (const cdouble& v : snapshot.samples) {
    const double re = v.real();
    const double im = v.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof re);
    out.write(reinterpret_cast<const char*>(&im), sizeof im);
  }
  if (!out) throw std::runtime_error("save_snapshot_binary: write failed for " + path.string());
}

PilotSnapshot load_snapshot_binary(const std::filesystem::path& path, double transmit_power) {
  if (!(transmit_power > 0.0))
    throw std::invalid_argument("load_snapshot_binary: transmit power must be > 0");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_snapshot_binary: cannot open " + path.string());
  in.seekg(0, std::ios::end);
  const auto bytes = static_cast<std::size_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  constexpr std::size_t sample_bytes = 2 * sizeof(double);
  if (bytes % sample_bytes != 0)
    throw std::runtime_error("load_snapshot_binary: " + path.string() +
                             " is not a whole number of complex samples");
  PilotSnapshot snap;
  snap.transmit_power = transmit_power;
  snap.samples.resize(bytes / sample_bytes);
  for (cdouble& v : snap.samples) {
    double re = 0.0;
    double im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof re);
    in.read(reinterpret_cast<char*>(&im), sizeof im);
    v = {re, im};
  }
  if (!in) throw std::runtime_error("load_snapshot_binary: short read from " + path.string());
  return snap;
}

}  // namespace elaa
