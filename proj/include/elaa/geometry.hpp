#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace elaa {

using cdouble = std::complex<double>;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Uniform linear array along the y-axis, centred on the origin and split
/// into equal contiguous subarrays. All lengths are in carrier wavelengths.
class ArrayGeometry {
 public:
  ArrayGeometry(int elements, int subarrays, double spacing);

  int elements() const { return elements_; }
  int subarrays() const { return subarrays_; }
  int subarray_size() const { return elements_ / subarrays_; }
  double spacing() const { return spacing_; }

  /// y-coordinate of element m (1-based). Elements are symmetric about 0.
  double element_y(int m) const;
  Point element_coordinate(int m) const;

  /// 1-based index of the subarray that holds element m.
  int subarray_of_element(int m) const;

  /// Half-open 0-based element offset range [first, last) of subarray n.
  std::pair<int, int> subarray_span(int n) const;

  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;

 private:
  void check_element(int m) const;

  int elements_;
  int subarrays_;
  double spacing_;
};

/// Sorted set of 1-based subarray indices.
class SubarraySet {
 public:
  SubarraySet() = default;
  SubarraySet(std::initializer_list<int> indices);
  explicit SubarraySet(std::vector<int> indices);

  static SubarraySet full(int subarray_count);

  bool contains(int n) const;
  void insert(int n);
  bool empty() const { return indices_.empty(); }
  int count() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const SubarraySet&, const SubarraySet&) = default;

 private:
  std::vector<int> indices_;  // sorted, unique, all >= 1
};

/// Throws std::domain_error unless every index lies in 1..subarray_count.
void require_within(const SubarraySet& set, int subarray_count);

}  // namespace elaa
