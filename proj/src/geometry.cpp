#include "elaa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace elaa {

ArrayGeometry::ArrayGeometry(int elements, int subarrays, double spacing)
    : elements_(elements), subarrays_(subarrays), spacing_(spacing) {
  if (elements < 1) throw std::invalid_argument("ArrayGeometry: element count must be positive");
  if (subarrays < 1) throw std::invalid_argument("ArrayGeometry: subarray count must be positive");
  if (elements % subarrays != 0)
    throw std::invalid_argument("ArrayGeometry: subarray count must divide element count");
  if (elements / subarrays < 2)
    throw std::invalid_argument("ArrayGeometry: subarrays must hold at least 2 elements");
  if (!(spacing > 0.0)) throw std::invalid_argument("ArrayGeometry: spacing must be positive");
}

void ArrayGeometry::check_element(int m) const {
  if (m < 1 || m > elements_)
    throw std::out_of_range("ArrayGeometry: element index " + std::to_string(m) +
                            " outside 1.." + std::to_string(elements_));
}

double ArrayGeometry::element_y(int m) const {
  check_element(m);
  return (m - 1 - (elements_ - 1) / 2.0) * spacing_;
}

Point ArrayGeometry::element_coordinate(int m) const { return {0.0, element_y(m)}; }

int ArrayGeometry::subarray_of_element(int m) const {
  check_element(m);
  // ceil(m*N/M) in exact integer arithmetic
  return static_cast<int>((static_cast<long>(m) * subarrays_ + elements_ - 1) / elements_);
}

std::pair<int, int> ArrayGeometry::subarray_span(int n) const {
  if (n < 1 || n > subarrays_)
    throw std::out_of_range("ArrayGeometry: subarray index " + std::to_string(n) +
                            " outside 1.." + std::to_string(subarrays_));
  const int size = subarray_size();
  return {(n - 1) * size, n * size};
}

SubarraySet::SubarraySet(std::initializer_list<int> indices)
    : SubarraySet(std::vector<int>(indices)) {}

SubarraySet::SubarraySet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.front() < 1)
    throw std::domain_error("SubarraySet: indices must be >= 1");
}

SubarraySet SubarraySet::full(int subarray_count) {
  std::vector<int> all(static_cast<std::size_t>(std::max(subarray_count, 0)));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
  return SubarraySet(std::move(all));
}

bool SubarraySet::contains(int n) const {
  return std::binary_search(indices_.begin(), indices_.end(), n);
}

void SubarraySet::insert(int n) {
  if (n < 1) throw std::domain_error("SubarraySet: indices must be >= 1");
  auto it = std::lower_bound(indices_.begin(), indices_.end(), n);
  if (it == indices_.end() || *it != n) indices_.insert(it, n);
}

void require_within(const SubarraySet& set, int subarray_count) {
  if (!set.empty() && set.indices().back() > subarray_count)
    throw std::domain_error("subarray index " + std::to_string(set.indices().back()) +
                            " outside 1.." + std::to_string(subarray_count));
}

}  // namespace elaa
