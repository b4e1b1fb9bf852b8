#pragma once

#include "hsd/analytic_map.hpp"
#include "hsd/jet.hpp"

namespace hsd {

/// Independent derivative oracle: fourth-order central differences of plain
/// map values. Cross-checks closed-form jets; never used on the main path.
/// The point and its 3*step neighborhood must lie in the map's domain.
Jet3 fd_oracle(const AnalyticMap& f, cplx z, double step = 5e-3);

}  // namespace hsd
