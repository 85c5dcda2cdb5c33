#pragma once

#include <span>
#include <vector>

#include "elaa/geometry.hpp"

namespace elaa {

// Forward DFT with 1/sqrt(K) scaling, so noise statistics are preserved.
std::vector<cdouble> unitary_dft(std::span<const cdouble> input);

}  // namespace elaa
