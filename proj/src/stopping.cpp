#include "elaa/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "elaa/dft.hpp"

namespace elaa {

double noise_threshold(int bins, double false_alarm) {
  if (bins < 1) throw std::invalid_argument("noise_threshold: bins must be >= 1");
  if (!(false_alarm > 0.0) || !(false_alarm < 1.0))
    throw std::invalid_argument("noise_threshold: false alarm rate must lie in (0, 1)");
  // Solves 1 - (1 - exp(-tau))^K = pfa without cancellation near pfa -> 0.
  return -std::log(-std::expm1(std::log1p(-false_alarm) / static_cast<double>(bins)));
}

double max_bin_power(std::span<const cdouble> segment) {
  const std::vector<cdouble> bins = unitary_dft(segment);
  double best = 0.0;
  for (const cdouble& v : bins) best = std::max(best, std::norm(v));
  return best;
}

bool segment_is_noise(std::span<const cdouble> segment, double false_alarm) {
  return max_bin_power(segment) <
         noise_threshold(static_cast<int>(segment.size()), false_alarm);
}

SubarraySet subarrays_above_noise(const ArrayGeometry& geometry,
                                  std::span<const cdouble> residual, double false_alarm) {
  if (residual.size() != static_cast<std::size_t>(geometry.elements()))
    throw std::invalid_argument("residual length does not match the element count");
  SubarraySet failing;
  for (int n = 1; n <= geometry.subarrays(); ++n) {
    const auto [lo, hi] = geometry.subarray_span(n);
    const auto segment = residual.subspan(static_cast<std::size_t>(lo),
                                          static_cast<std::size_t>(hi - lo));
    if (!segment_is_noise(segment, false_alarm)) failing.insert(n);
  }
  return failing;
}

}  // namespace elaa
