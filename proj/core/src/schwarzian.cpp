#include "hsd/schwarzian.hpp"

#include "hsd/errors.hpp"

namespace hsd {

namespace {

// The weight is singular where 1 - |omega|^2 ~ 0; the norm estimator treats
// the boundary by limits instead of evaluating there.
constexpr double kSenseMargin = 1e-14;

}  // namespace

cplx schwarzian(const Jet3& j) {
    if (j.f1 == 0.0)
        throw NotLocallyUnivalent("Schwarzian undefined where f' vanishes");
    const cplx ratio = j.f2 / j.f1;
    return j.f3 / j.f1 - 1.5 * ratio * ratio;
}

SchwarzianSample schwarzian(const HarmonicMap& f, cplx z) {
    if (!in_unit_disk(z)) throw OutOfDomain("Schwarzian evaluation point left the disk");
    const Jet3 hp = f.analytic_derivative_jet(z);
    if (hp.f0 == 0.0) throw NotLocallyUnivalent("Schwarzian undefined where h' vanishes");
    const Jet3 w = f.co_analytic_derivative_jet(z) / hp;  // omega, omega', omega''
    const double denom = 1.0 - abs_sq(w.f0);
    if (denom < kSenseMargin)
        throw NotSensePreserving("dilatation modulus reached 1 at the evaluation point");

    const cplx h_ratio = hp.f1 / hp.f0;  // h''/h'
    const cplx sh = hp.f2 / hp.f0 - 1.5 * h_ratio * h_ratio;
    const cplx wbar = std::conj(w.f0);
    const cplx cross = wbar / denom * (h_ratio * w.f1 - w.f2);
    const cplx tail = w.f1 * wbar / denom;
    const cplx value = sh + cross - 1.5 * tail * tail;

    const double weight = 1.0 - abs_sq(z);
    SchwarzianSample s{z, value, std::abs(value) * weight * weight};
    if (!is_finite(s.value) || !std::isfinite(s.scaled))
        throw NonFiniteValue("harmonic Schwarzian evaluation overflowed");
    return s;
}

double schwarzian_scaled(const HarmonicMap& f, cplx z) { return schwarzian(f, z).scaled; }

cplx hyperbolic_derivative(const AnalyticMap& omega, cplx z) {
    if (!in_unit_disk(z)) throw OutOfDomain("hyperbolic derivative needs |z| < 1");
    const Jet3 w = omega.jet(z);
    const double denom = 1.0 - abs_sq(w.f0);
    if (!(denom > 0.0))
        throw OutOfDomain("hyperbolic derivative needs |omega(z)| < 1");
    return w.f1 * (1.0 - abs_sq(z)) / denom;
}

}  // namespace hsd
