#pragma once

#include <string>

#include "hsd/complex.hpp"

namespace hsd {

/// Shortest decimal string that round-trips the exact double.
std::string format_double(double x);

/// "re,im" with the shortest round-trip rule for each component.
std::string format_complex_csv(cplx z);

}  // namespace hsd
