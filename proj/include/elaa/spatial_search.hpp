#pragma once

#include <span>
#include <vector>

#include "elaa/geometry.hpp"
#include "elaa/grid.hpp"

namespace elaa {

// One subarray's share of the correlation at a point: sum of conj(z_m) b_m
// over its elements.
struct SubarrayPartial {
  int subarray = 0;
  cdouble sum;

  bool operator==(const SubarrayPartial&) const = default;
};

struct ArgmaxResult {
  Point point;
  std::size_t flat_index = 0;
  double power = 0.0;
  std::vector<SubarrayPartial> partials;
};

// Correlation power between the masked observation and the unit-modulus
// steering phase at one candidate point.
double radiation_power(const ArrayGeometry& geometry, std::span<const cdouble> z,
                       const SubarraySet& mask, Point point);

// Power at every grid point, x-major.
std::vector<double> radiation_map(const ArrayGeometry& geometry, std::span<const cdouble> z,
                                  const SubarraySet& mask, const SearchGrid& grid);

// Highest-power grid point. Ties resolve to the smaller x, then the smaller y,
// and the result is identical for any thread count.
ArgmaxResult grid_argmax(const ArrayGeometry& geometry, std::span<const cdouble> z,
                         const SubarraySet& mask, const SearchGrid& grid, int threads = 1);

}  // namespace elaa
