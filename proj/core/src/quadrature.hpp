#pragma once

#include <functional>

#include "hsd/complex.hpp"

namespace hsd::detail {

// Line integral of f along the straight segment [0, z], 32-node
// Gauss-Legendre, one panel per 0.25 of arc length.
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx z);

}  // namespace hsd::detail
