#pragma once

#include <string>

namespace elaa {

// Shortest decimal form that parses back to the exact same double.
std::string format_double(double value);

}  // namespace elaa
