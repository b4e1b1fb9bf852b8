#pragma once

#include "hsd/analytic_map.hpp"
#include "hsd/catalog.hpp"
#include "hsd/complex.hpp"
#include "hsd/jet.hpp"

namespace hsd {

/// One evaluation of the harmonic Schwarzian together with the disk-weighted
/// magnitude |S_f(z)| (1 - |z|^2)^2 whose supremum is the Schwarzian norm.
struct SchwarzianSample {
    cplx z;
    cplx value;
    double scaled;
};

/// Analytic Schwarzian from a jet: f'''/f' - (3/2)(f''/f')^2.
cplx schwarzian(const Jet3& j);

/// Harmonic Schwarzian of a sense-preserving map, assembled from the jets of
/// h' and of the dilatation omega = g'/h':
///   S_f = Sh + conj(w)/(1-|w|^2) ((h''/h') w' - w'') - (3/2)(w' conj(w)/(1-|w|^2))^2.
/// Reduces exactly to Sh when g is constant.
SchwarzianSample schwarzian(const HarmonicMap& f, cplx z);

double schwarzian_scaled(const HarmonicMap& f, cplx z);

/// Hyperbolic derivative of a disk self-map:
/// omega'(z) (1 - |z|^2) / (1 - |omega(z)|^2). Schwarz-Pick bounds its
/// modulus by 1.
cplx hyperbolic_derivative(const AnalyticMap& omega, cplx z);

}  // namespace hsd
