#pragma once

#include <span>

#include "elaa/geometry.hpp"

namespace elaa {

// Detection threshold tau for the max squared unitary-DFT bin of a
// unit-variance complex Gaussian segment: with K independent Exp(1) bins,
// P(max >= tau) = false_alarm.
double noise_threshold(int bins, double false_alarm);

// Largest squared unitary-DFT bin of the segment.
double max_bin_power(std::span<const cdouble> segment);

// True when every bin stays below the threshold for the segment's length.
bool segment_is_noise(std::span<const cdouble> segment, double false_alarm);

// Subarrays whose residual segment fails the noise test (still carries
// signal). May be empty.
SubarraySet subarrays_above_noise(const ArrayGeometry& geometry,
                                  std::span<const cdouble> residual, double false_alarm);

}  // namespace elaa
