#include "elaa/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "elaa/spatial_search.hpp"
#include "elaa/stopping.hpp"

namespace elaa {
namespace {

class PhaseClock {
 public:
  explicit PhaseClock(double& bucket)
      : bucket_(bucket), start_(std::chrono::steady_clock::now()) {}
  ~PhaseClock() {
    bucket_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  PhaseClock(const PhaseClock&) = delete;
  PhaseClock& operator=(const PhaseClock&) = delete;

 private:
  double& bucket_;
  std::chrono::steady_clock::time_point start_;
};

void check_snapshot(const ArrayGeometry& geometry, const PilotSnapshot& snapshot) {
  if (snapshot.samples.size() != static_cast<std::size_t>(geometry.elements()))
    throw std::invalid_argument("snapshot length does not match the element count");
  if (!(snapshot.transmit_power > 0.0))
    throw std::invalid_argument("snapshot transmit power must be > 0");
}

void subtract_path(const ArrayGeometry& geometry, const EstimatedPath& path,
                   std::vector<cdouble>& residual) {
  for (int n : path.visible) {
    const auto [lo, hi] = geometry.subarray_span(n);
    for (int i = lo; i < hi; ++i)
      residual[static_cast<std::size_t>(i)] -=
          path.amplitude * element_response(geometry, i + 1, path.position);
  }
}

// b_n^H a_n at the point: the unit-modulus phases cancel, leaving the sum of
// the amplitude taper over the subarray.
double subarray_taper_sum(const ArrayGeometry& geometry, int n, Point point) {
  const auto [lo, hi] = geometry.subarray_span(n);
  double sum = 0.0;
  for (int i = lo; i < hi; ++i) sum += point.x / element_distance(geometry, i + 1, point);
  return sum;
}

}  // namespace

void StoppingConfig::validate() const {
  if (!(false_alarm > 0.0) || !(false_alarm < 1.0))
    throw std::invalid_argument("stopping: false alarm rate must lie in (0, 1)");
  if (max_iterations < 1)
    throw std::invalid_argument("stopping: max_iterations must be >= 1");
}

void EstimatorParams::validate() const {
  if (!(coarse_step > 0.0) || !(fine_step > 0.0))
    throw std::invalid_argument("estimator: grid steps must be > 0");
  if (fine_half_x < 0.0 || fine_half_y < 0.0)
    throw std::invalid_argument("estimator: window half extents must be >= 0");
  if (!(energy_fraction > 0.0) || !(energy_fraction < 1.0))
    throw std::invalid_argument("estimator: energy_fraction must lie in (0, 1)");
  if (!(gate_scale > 0.0) || !(gate_scale < 1.0))
    throw std::invalid_argument("estimator: gate_scale must lie in (0, 1)");
  if (threads < 1) throw std::invalid_argument("estimator: threads must be >= 1");
  stopping.validate();
}

cdouble project_amplitude(const ArrayGeometry& geometry, std::span<const cdouble> z,
                          const SubarraySet& mask, Point point) {
  if (z.size() != static_cast<std::size_t>(geometry.elements()))
    throw std::invalid_argument("observation length does not match the element count");
  if (mask.empty()) throw std::invalid_argument("project_amplitude: empty mask");
  require_within(mask, geometry.subarrays());
  cdouble num{};
  double den = 0.0;
  for (int n : mask) {
    const auto [lo, hi] = geometry.subarray_span(n);
    for (int i = lo; i < hi; ++i) {
      const cdouble a = element_response(geometry, i + 1, point);
      num += std::conj(a) * z[static_cast<std::size_t>(i)];
      den += std::norm(a);
    }
  }
  if (!(den > 0.0)) throw std::domain_error("project_amplitude: zero-energy atom");
  return num / den;
}

std::vector<cdouble> reconstruct_channel(const ArrayGeometry& geometry,
                                         std::span<const EstimatedPath> paths,
                                         double transmit_power) {
  if (!(transmit_power > 0.0))
    throw std::invalid_argument("reconstruct_channel: transmit power must be > 0");
  const double inv_amp = 1.0 / std::sqrt(transmit_power);
  std::vector<cdouble> h(static_cast<std::size_t>(geometry.elements()));
  for (const EstimatedPath& path : paths) {
    for (int n : path.visible) {
      const auto [lo, hi] = geometry.subarray_span(n);
      for (int i = lo; i < hi; ++i)
        h[static_cast<std::size_t>(i)] +=
            inv_amp * path.amplitude * element_response(geometry, i + 1, path.position);
    }
  }
  return h;
}

EstimationResult subarray_wise_estimate(const ArrayGeometry& geometry,
                                        const PilotSnapshot& snapshot,
                                        const RegionBounds& bounds,
                                        const EstimatorParams& params) {
  check_snapshot(geometry, snapshot);
  bounds.validate();
  params.validate();

  const SearchGrid coarse = coarse_grid(bounds, params.coarse_step);
  std::vector<cdouble> residual = snapshot.samples;
  EstimationResult result;
  result.subarray_path_counts.assign(static_cast<std::size_t>(geometry.subarrays()), 0);

  for (int n = 1; n <= geometry.subarrays(); ++n) {
    const auto [lo, hi] = geometry.subarray_span(n);
    const SubarraySet mask{n};
    for (int it = 0;;) {
      const std::span<const cdouble> segment{residual.data() + lo,
                                             static_cast<std::size_t>(hi - lo)};
      bool noise_only = false;
      {
        PhaseClock clock(result.timings.noise_test);
        noise_only = segment_is_noise(segment, params.stopping.false_alarm);
      }
      if (noise_only) break;
      if (it >= params.stopping.max_iterations) {
        result.truncated = true;
        break;
      }
      ++it;
      ArgmaxResult hit;
      {
        PhaseClock clock(result.timings.coarse_search);
        hit = grid_argmax(geometry, residual, mask, coarse, params.threads);
      }
      ArgmaxResult refined;
      {
        PhaseClock clock(result.timings.fine_search);
        const SearchGrid local =
            local_grid(hit.point, params.resolved_fine_half_x(), params.resolved_fine_half_y(),
                       params.fine_step, bounds);
        refined = grid_argmax(geometry, residual, mask, local, params.threads);
      }
      PhaseClock clock(result.timings.amplitude);
      const cdouble amplitude = project_amplitude(geometry, residual, mask, refined.point);
      const EstimatedPath path{refined.point, amplitude, mask};
      subtract_path(geometry, path, residual);
      result.paths.push_back(path);
      ++result.subarray_path_counts[static_cast<std::size_t>(n - 1)];
    }
  }

  result.channel = reconstruct_channel(geometry, result.paths, snapshot.transmit_power);
  return result;
}

EstimationResult scatterer_wise_estimate(const ArrayGeometry& geometry,
                                         const PilotSnapshot& snapshot,
                                         const RegionBounds& bounds,
                                         const EstimatorParams& params) {
  check_snapshot(geometry, snapshot);
  bounds.validate();
  params.validate();

  const SearchGrid coarse = coarse_grid(bounds, params.coarse_step);
  const double noise_floor = static_cast<double>(geometry.subarray_size());
  std::vector<cdouble> residual = snapshot.samples;
  EstimationResult result;
  result.subarray_path_counts.assign(static_cast<std::size_t>(geometry.subarrays()), 0);

  for (int it = 0;;) {
    SubarraySet active;
    {
      PhaseClock clock(result.timings.noise_test);
      active = subarrays_above_noise(geometry, residual, params.stopping.false_alarm);
    }
    if (active.empty()) break;
    if (it >= params.stopping.max_iterations) {
      result.truncated = true;
      break;
    }
    ++it;

    ArgmaxResult hit;
    {
      PhaseClock clock(result.timings.coarse_search);
      hit = grid_argmax(geometry, residual, active, coarse, params.threads);
    }

    // Rank active subarrays by their share of the winning correlation and
    // keep the smallest prefix holding at least the configured fraction.
    SubarraySet support;
    {
      PhaseClock clock(result.timings.support);
      double total = 0.0;
      for (const SubarrayPartial& p : hit.partials) total += std::norm(p.sum);
      std::vector<std::pair<double, int>> ranked;
      ranked.reserve(hit.partials.size());
      for (const SubarrayPartial& p : hit.partials)
        ranked.emplace_back(total > 0.0 ? std::norm(p.sum) / total : 0.0, p.subarray);
      std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      double cumulative = 0.0;
      for (const auto& [share, n] : ranked) {
        support.insert(n);
        cumulative += share;
        if (cumulative >= params.energy_fraction) break;
      }
    }

    ArgmaxResult refined;
    {
      PhaseClock clock(result.timings.fine_search);
      const SearchGrid local =
          local_grid(hit.point, params.resolved_fine_half_x(), params.resolved_fine_half_y(),
                     params.fine_step, bounds);
      refined = grid_argmax(geometry, residual, support, local, params.threads);
    }

    // A subarray stays in the path's visible set when its measured power at
    // the refined point clears the modeled signal power plus the noise floor.
    SubarraySet gated;
    {
      PhaseClock clock(result.timings.support);
      const cdouble coarse_amp = project_amplitude(geometry, residual, support, refined.point);
      for (int n : active) {
        const double measured =
            radiation_power(geometry, residual, SubarraySet{n}, refined.point);
        const double taper = subarray_taper_sum(geometry, n, refined.point);
        if (measured >= params.gate_scale * std::norm(coarse_amp) * taper * taper + noise_floor)
          gated.insert(n);
      }
      if (gated.empty()) gated = support;
    }

    PhaseClock clock(result.timings.amplitude);
    const cdouble amplitude = project_amplitude(geometry, residual, gated, refined.point);
    const EstimatedPath path{refined.point, amplitude, gated};
    subtract_path(geometry, path, residual);
    result.paths.push_back(path);
    for (int n : gated) ++result.subarray_path_counts[static_cast<std::size_t>(n - 1)];
  }

  result.channel = reconstruct_channel(geometry, result.paths, snapshot.transmit_power);
  return result;
}

std::vector<cdouble> ls_estimate(const PilotSnapshot& snapshot) {
  if (!(snapshot.transmit_power > 0.0))
    throw std::invalid_argument("ls_estimate: transmit power must be > 0");
  const double inv_amp = 1.0 / std::sqrt(snapshot.transmit_power);
  std::vector<cdouble> h = snapshot.samples;
  for (cdouble& v : h) v *= inv_amp;
  return h;
}

nlohmann::json result_to_json(const EstimationResult& result, bool include_timings) {
  nlohmann::json paths = nlohmann::json::array();
  for (const EstimatedPath& p : result.paths) {
    paths.push_back({{"x", p.position.x},
                     {"y", p.position.y},
                     {"amplitude_re", p.amplitude.real()},
                     {"amplitude_im", p.amplitude.imag()},
                     {"visible", p.visible.indices()}});
  }
  std::vector<double> re(result.channel.size());
  std::vector<double> im(result.channel.size());
  for (std::size_t i = 0; i < result.channel.size(); ++i) {
    re[i] = result.channel[i].real();
    im[i] = result.channel[i].imag();
  }
  nlohmann::json j{{"paths", std::move(paths)},
                   {"iterations", result.paths.size()},
                   {"subarray_path_counts", result.subarray_path_counts},
                   {"truncated", result.truncated},
                   {"channel_re", re},
                   {"channel_im", im}};
  if (include_timings) {
    j["timings"] = {{"noise_test", result.timings.noise_test},
                    {"coarse_search", result.timings.coarse_search},
                    {"fine_search", result.timings.fine_search},
                    {"amplitude", result.timings.amplitude},
                    {"support", result.timings.support}};
  }
  return j;
}

}  // namespace elaa
