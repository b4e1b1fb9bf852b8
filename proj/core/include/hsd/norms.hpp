#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "hsd/analytic_map.hpp"
#include "hsd/catalog.hpp"
#include "hsd/complex.hpp"

namespace hsd {

/// Non-negative field on the open disk whose supremum is wanted.
using ScalarField = std::function<double(cplx)>;

ScalarField schwarzian_field(HarmonicMap f);
ScalarField hyperbolic_field(AnalyticMap omega);

struct GridConfig {
    int n_radii = 256;   // geometrically clustered toward r = 1
    int n_angles = 512;
    double refine_tol = 1e-10;  // position tolerance of the local refinement
    int ladder_first = 3;       // boundary ladder evaluates r = 1 - 10^-k,
    int ladder_last = 7;        // k = ladder_first .. ladder_last
};

/// Result of a supremum scan. `value` always dominates every sample that was
/// evaluated. When the field keeps growing along the boundary ladder the
/// reported value is the extrapolated radial limit and `attained` is false;
/// in that case |argmax| > 0.999.
struct NormEstimate {
    double value = 0.0;
    cplx argmax{};
    bool attained = true;
    int n_radii = 0;
    int n_angles = 0;
    double refinement_error = 0.0;
};

/// Three-stage estimator: polar grid scan, derivative-free refinement of the
/// best cells, then a radial boundary ladder with Richardson extrapolation.
/// Deterministic: identical inputs give identical results.
NormEstimate sup_norm(const ScalarField& field, const GridConfig& cfg = {});

/// Radii 1 - 2^(-8 j / n) for j = 0..n-1 (the scan grid).
std::vector<double> grid_radii(int n);
std::vector<double> grid_angles(int n);

/// CSV rows `re,im,scaled` over the scan grid, radii outer loop, shortest
/// round-trip number formatting.
void write_heatmap_csv(std::ostream& out, const ScalarField& field, int n_radii, int n_angles);

}  // namespace hsd
