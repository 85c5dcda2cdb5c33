#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "elaa/grid.hpp"

using namespace elaa;

TEST_CASE("axis samples cover start to stop inclusively") {
  CHECK(axis_samples(0.0, 10.0, 2.5) == std::vector<double>{0.0, 2.5, 5.0, 7.5, 10.0});
  CHECK(axis_samples(5.0, 5.0, 1.0) == std::vector<double>{5.0});
  // a non-representable step must still hit the nominal endpoint count
  CHECK(axis_samples(0.0, 1.0, 0.1).size() == 11);
  CHECK(axis_samples(20.0, 200.0, 4.0).size() == 46);
  CHECK(axis_samples(-600.0, 600.0, 4.0).size() == 301);
  CHECK_THROWS_AS(axis_samples(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(axis_samples(1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("flat indexing scans y fastest within ascending x") {
  const SearchGrid grid{{1.0, 2.0}, {10.0, 20.0, 30.0}};
  CHECK(grid.size() == 6);
  CHECK(grid.at(0) == Point{1.0, 10.0});
  CHECK(grid.at(1) == Point{1.0, 20.0});
  CHECK(grid.at(2) == Point{1.0, 30.0});
  CHECK(grid.at(3) == Point{2.0, 10.0});
  CHECK(grid.at(5) == Point{2.0, 30.0});
  CHECK_THROWS_AS(grid.at(6), std::out_of_range);
}

TEST_CASE("coarse grid spans the whole region at the requested step") {
  const RegionBounds bounds{20.0, 200.0, -600.0, 600.0};
  const SearchGrid grid = coarse_grid(bounds, 4.0);
  CHECK(grid.xs.size() == 46);
  CHECK(grid.ys.size() == 301);
  CHECK(grid.xs.front() == 20.0);
  CHECK(grid.xs.back() == 200.0);
  CHECK(grid.ys.front() == -600.0);
  CHECK(grid.ys.back() == 600.0);
  CHECK(std::is_sorted(grid.xs.begin(), grid.xs.end()));

  // pattern-style bounds may touch x = 0
  const SearchGrid zero_x = coarse_grid(RegionBounds{0.0, 200.0, -600.0, 600.0}, 1.0);
  CHECK(zero_x.xs.size() == 201);
  CHECK(zero_x.ys.size() == 1201);
  CHECK(zero_x.xs.front() == 0.0);
}

TEST_CASE("local window is dense and centred") {
  const RegionBounds bounds{20.0, 200.0, -600.0, 600.0};
  const SearchGrid grid = local_grid({100.0, 0.0}, 4.0, 4.0, 0.1, bounds);
  CHECK(grid.xs.size() == 81);
  CHECK(grid.ys.size() == 81);
  // the centre itself must be an exact sample
  CHECK(std::count(grid.xs.begin(), grid.xs.end(), 100.0) == 1);
  CHECK(std::count(grid.ys.begin(), grid.ys.end(), 0.0) == 1);
  CHECK(grid.xs.front() == doctest::Approx(96.0).epsilon(1e-12));
  CHECK(grid.xs.back() == doctest::Approx(104.0).epsilon(1e-12));
  CHECK(std::is_sorted(grid.xs.begin(), grid.xs.end()));
  CHECK(std::is_sorted(grid.ys.begin(), grid.ys.end()));
}

TEST_CASE("local window clips to the region") {
  const RegionBounds bounds{20.0, 200.0, -600.0, 600.0};
  const SearchGrid grid = local_grid({22.0, -598.0}, 4.0, 4.0, 0.1, bounds);
  CHECK(grid.xs.front() >= 20.0);
  CHECK(grid.ys.front() >= -600.0);
  CHECK(grid.xs.size() == 61);   // 20.0 .. 26.0
  CHECK(grid.ys.size() == 61);   // -600.0 .. -594.0
  CHECK(std::count(grid.xs.begin(), grid.xs.end(), 22.0) == 1);
}

TEST_CASE("local window never emits non-positive x") {
  const RegionBounds bounds{0.05, 10.0, -5.0, 5.0};
  const SearchGrid grid = local_grid({0.2, 0.0}, 1.0, 1.0, 0.1, bounds);
  for (double x : grid.xs) CHECK(x > 0.0);
  CHECK(std::count(grid.xs.begin(), grid.xs.end(), 0.2) == 1);
  CHECK(grid.xs.front() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("local window rejects centres outside the region") {
  const RegionBounds bounds{20.0, 200.0, -600.0, 600.0};
  CHECK_THROWS_AS(local_grid({10.0, 0.0}, 4.0, 4.0, 0.1, bounds), std::invalid_argument);
  CHECK_THROWS_AS(local_grid({100.0, 700.0}, 4.0, 4.0, 0.1, bounds), std::invalid_argument);
  CHECK_THROWS_AS(local_grid({100.0, 0.0}, 4.0, 4.0, 0.0, bounds), std::invalid_argument);
  CHECK_THROWS_AS(local_grid({100.0, 0.0}, -1.0, 4.0, 0.1, bounds), std::invalid_argument);
}

TEST_CASE("zero half extent degenerates to the centre line") {
  const RegionBounds bounds{20.0, 200.0, -600.0, 600.0};
  const SearchGrid grid = local_grid({100.0, 0.0}, 0.0, 4.0, 0.1, bounds);
  CHECK(grid.xs == std::vector<double>{100.0});
  CHECK(grid.ys.size() == 81);
}
