#include "elaa/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace elaa {

Point SearchGrid::at(std::size_t flat) const {
  if (flat >= size()) throw std::out_of_range("SearchGrid::at: flat index out of range");
  return {xs[flat / ys.size()], ys[flat % ys.size()]};
}

std::vector<double> axis_samples(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("axis_samples: step must be > 0");
  if (stop < start) throw std::invalid_argument("axis_samples: stop must be >= start");
  const double spans = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(spans * (1.0 + 1e-12) + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t k = 0; k < count; ++k) v[k] = start + static_cast<double>(k) * step;
  return v;
}

SearchGrid coarse_grid(const RegionBounds& bounds, double step) {
  bounds.validate_allowing_zero_x();
  return {axis_samples(bounds.x_min, bounds.x_max, step),
          axis_samples(bounds.y_min, bounds.y_max, step)};
}

SearchGrid local_grid(Point center, double half_x, double half_y, double step,
                      const RegionBounds& bounds) {
  bounds.validate_allowing_zero_x();
  if (!(step > 0.0)) throw std::invalid_argument("local_grid: step must be > 0");
  if (half_x < 0.0 || half_y < 0.0)
    throw std::invalid_argument("local_grid: window half extents must be >= 0");
  if (center.x < bounds.x_min || center.x > bounds.x_max || center.y < bounds.y_min ||
      center.y > bounds.y_max || !(center.x > 0.0))
    throw std::invalid_argument("local_grid: center outside the search region");

  const auto axis = [step](double c, double half, double lo, double hi, bool positive_only) {
    const auto k = static_cast<long>(std::floor(half / step * (1.0 + 1e-12) + 1e-9));
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(2 * k + 1));
    for (long i = -k; i <= k; ++i) {
      if (i == 0) {
        v.push_back(c);
        continue;
      }
      const double value = c + static_cast<double>(i) * step;
      if (value < lo || value > hi) continue;
      if (positive_only && !(value > 0.0)) continue;
      v.push_back(value);
    }
    return v;
  };

  return {axis(center.x, half_x, bounds.x_min, bounds.x_max, true),
          axis(center.y, half_y, bounds.y_min, bounds.y_max, false)};
}

}  // namespace elaa
