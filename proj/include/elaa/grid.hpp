#pragma once

#include <cstddef>
#include <vector>

#include "elaa/geometry.hpp"
#include "elaa/scene.hpp"

namespace elaa {

// Cross product of two axis samplings, scanned x-major then y.
struct SearchGrid {
  std::vector<double> xs;
  std::vector<double> ys;

  std::size_t size() const { return xs.size() * ys.size(); }
  Point at(std::size_t flat) const;

  bool operator==(const SearchGrid&) const = default;
};

// start, start+step, ... while <= stop (tolerant to rounding in the last step).
std::vector<double> axis_samples(double start, double stop, double step);

SearchGrid coarse_grid(const RegionBounds& bounds, double step);

// Window of +/- half_x, half_y around a coarse hit in steps of `step`.
// Points outside the bounds or with x <= 0 are dropped; the center is kept.
SearchGrid local_grid(Point center, double half_x, double half_y, double step,
                      const RegionBounds& bounds);

}  // namespace elaa
