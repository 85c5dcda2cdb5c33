#include <stdexcept>

#include "doctest.h"
#include "elaa/geometry.hpp"

using namespace elaa;

TEST_CASE("element coordinates are centred and symmetric") {
  const ArrayGeometry g(1024, 4, 0.5);
  CHECK(g.element_y(1) == doctest::Approx(-255.75).epsilon(1e-15));
  CHECK(g.element_y(1024) == doctest::Approx(255.75).epsilon(1e-15));
  for (int m : {1, 2, 100, 512}) {
    CHECK(g.element_y(m) == doctest::Approx(-g.element_y(1024 + 1 - m)).epsilon(1e-15));
  }
  CHECK(g.element_coordinate(7).x == 0.0);
  CHECK(g.element_coordinate(7).y == g.element_y(7));
}

TEST_CASE("element spacing matches the configured pitch") {
  const ArrayGeometry g(16, 2, 0.37);
  for (int m = 1; m < 16; ++m) {
    CHECK(g.element_y(m + 1) - g.element_y(m) == doctest::Approx(0.37).epsilon(1e-12));
  }
}

TEST_CASE("subarray lookup maps elements to contiguous blocks") {
  const ArrayGeometry g(8, 4, 0.5);
  CHECK(g.subarray_size() == 2);
  CHECK(g.subarray_of_element(1) == 1);
  CHECK(g.subarray_of_element(2) == 1);
  CHECK(g.subarray_of_element(3) == 2);
  CHECK(g.subarray_of_element(8) == 4);
  CHECK(g.subarray_span(1) == std::pair<int, int>{0, 2});
  CHECK(g.subarray_span(4) == std::pair<int, int>{6, 8});
  for (int n = 1; n <= 4; ++n) {
    const auto [first, last] = g.subarray_span(n);
    for (int offset = first; offset < last; ++offset) {
      CHECK(g.subarray_of_element(offset + 1) == n);
    }
  }
}

TEST_CASE("geometry construction rejects bad shapes") {
  CHECK_THROWS_AS(ArrayGeometry(0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ArrayGeometry(8, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ArrayGeometry(10, 4, 0.5), std::invalid_argument);   // 4 does not divide 10
  CHECK_THROWS_AS(ArrayGeometry(8, 8, 0.5), std::invalid_argument);    // single-element subarrays
  CHECK_THROWS_AS(ArrayGeometry(8, 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ArrayGeometry(8, 4, -1.0), std::invalid_argument);
}

TEST_CASE("element and subarray indices are range checked") {
  const ArrayGeometry g(8, 4, 0.5);
  CHECK_THROWS_AS(g.element_y(0), std::out_of_range);
  CHECK_THROWS_AS(g.element_y(9), std::out_of_range);
  CHECK_THROWS_AS(g.subarray_span(0), std::out_of_range);
  CHECK_THROWS_AS(g.subarray_span(5), std::out_of_range);
}

TEST_CASE("subarray sets stay sorted and unique") {
  const SubarraySet s{3, 1, 3, 2};
  CHECK(s.indices() == std::vector<int>{1, 2, 3});
  CHECK(s.count() == 3);
  CHECK(s.contains(2));
  CHECK(!s.contains(4));

  SubarraySet t;
  CHECK(t.empty());
  t.insert(5);
  t.insert(2);
  t.insert(5);
  CHECK(t.indices() == std::vector<int>{2, 5});

  CHECK(SubarraySet::full(4).indices() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(SubarraySet{0}, std::domain_error);
}

TEST_CASE("require_within rejects out-of-range subarrays") {
  CHECK_NOTHROW(require_within(SubarraySet{1, 4}, 4));
  CHECK_NOTHROW(require_within(SubarraySet{}, 4));
  CHECK_THROWS_AS(require_within(SubarraySet{5}, 4), std::domain_error);
}
