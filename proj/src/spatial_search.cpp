#include "elaa/spatial_search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace elaa {
namespace {

// Masked elements packed contiguously and grouped by subarray, so the per-point
// kernel touches only visible entries.
struct CompactMask {
  std::vector<double> ys;
  std::vector<cdouble> conj_z;
  std::vector<std::size_t> group_ends;
  std::vector<int> subarrays;
};

CompactMask compact_mask(const ArrayGeometry& geometry, std::span<const cdouble> z,
                         const SubarraySet& mask) {
  if (z.size() != static_cast<std::size_t>(geometry.elements()))
    throw std::invalid_argument("observation length does not match the element count");
  require_within(mask, geometry.subarrays());
  CompactMask c;
  const auto total = static_cast<std::size_t>(mask.count() * geometry.subarray_size());
  c.ys.reserve(total);
  c.conj_z.reserve(total);
  for (int n : mask) {
    const auto [lo, hi] = geometry.subarray_span(n);
    for (int i = lo; i < hi; ++i) {
      c.ys.push_back(geometry.element_y(i + 1));
      c.conj_z.push_back(std::conj(z[static_cast<std::size_t>(i)]));
    }
    c.group_ends.push_back(c.ys.size());
    c.subarrays.push_back(n);
  }
  return c;
}

void point_partials(const CompactMask& c, Point pt, std::span<cdouble> out) {
  std::size_t begin = 0;
  for (std::size_t g = 0; g < c.group_ends.size(); ++g) {
    cdouble acc{};
    const std::size_t end = c.group_ends[g];
    for (std::size_t i = begin; i < end; ++i) {
      const double dy = pt.y - c.ys[i];
      const double phase = 2.0 * std::numbers::pi * std::sqrt(pt.x * pt.x + dy * dy);
      acc += c.conj_z[i] * cdouble{std::cos(phase), std::sin(phase)};
    }
    out[g] = acc;
    begin = end;
  }
}

double point_power(const CompactMask& c, Point pt, std::span<cdouble> partials) {
  point_partials(c, pt, partials);
  cdouble total{};
  for (const cdouble& v : partials) total += v;
  return std::norm(total);
}

}  // namespace

double radiation_power(const ArrayGeometry& geometry, std::span<const cdouble> z,
                       const SubarraySet& mask, Point point) {
  const CompactMask c = compact_mask(geometry, z, mask);
  std::vector<cdouble> partials(c.group_ends.size());
  return point_power(c, point, partials);
}

std::vector<double> radiation_map(const ArrayGeometry& geometry, std::span<const cdouble> z,
                                  const SubarraySet& mask, const SearchGrid& grid) {
  const CompactMask c = compact_mask(geometry, z, mask);
  std::vector<cdouble> partials(c.group_ends.size());
  std::vector<double> map(grid.size());
  std::size_t flat = 0;
  for (double x : grid.xs)
    for (double y : grid.ys) map[flat++] = point_power(c, {x, y}, partials);
  return map;
}

ArgmaxResult grid_argmax(const ArrayGeometry& geometry, std::span<const cdouble> z,
                         const SubarraySet& mask, const SearchGrid& grid, int threads) {
  if (grid.xs.empty() || grid.ys.empty())
    throw std::invalid_argument("grid_argmax: empty grid");
  if (mask.empty()) throw std::invalid_argument("grid_argmax: mask must name a subarray");
  const CompactMask c = compact_mask(geometry, z, mask);

  struct Best {
    double power = -1.0;
    std::size_t ix = 0;
    std::size_t iy = 0;
    std::vector<cdouble> partials;
  };

  // Strict > keeps the first hit of the x-major scan, so exact power ties
  // resolve to the smaller x, then the smaller y.
  const auto scan = [&](std::size_t x_begin, std::size_t x_end, Best& best) {
    std::vector<cdouble> partials(c.group_ends.size());
    for (std::size_t ix = x_begin; ix < x_end; ++ix) {
      for (std::size_t iy = 0; iy < grid.ys.size(); ++iy) {
        const double power = point_power(c, {grid.xs[ix], grid.ys[iy]}, partials);
        if (power > best.power) {
          best.power = power;
          best.ix = ix;
          best.iy = iy;
          best.partials.assign(partials.begin(), partials.end());
        }
      }
    }
  };

  const auto workers = static_cast<std::size_t>(
      std::clamp<long>(threads, 1, static_cast<long>(grid.xs.size())));
  std::vector<Best> bests(workers);
  if (workers == 1) {
    scan(0, grid.xs.size(), bests[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t x_begin = w * grid.xs.size() / workers;
      const std::size_t x_end = (w + 1) * grid.xs.size() / workers;
      pool.emplace_back(scan, x_begin, x_end, std::ref(bests[w]));
    }
    for (std::thread& t : pool) t.join();
  }

  // Chunks ascend in x, so the same strict comparison merges deterministically.
  Best* best = &bests[0];
  for (std::size_t w = 1; w < workers; ++w)
    if (bests[w].power > best->power) best = &bests[w];

  ArgmaxResult result;
  result.point = {grid.xs[best->ix], grid.ys[best->iy]};
  result.flat_index = best->ix * grid.ys.size() + best->iy;
  result.power = best->power;
  result.partials.resize(c.subarrays.size());
  for (std::size_t g = 0; g < c.subarrays.size(); ++g)
    result.partials[g] = {c.subarrays[g], best->partials[g]};
  return result;
}

}  // namespace elaa
