#pragma once

#include <span>
#include <vector>

#include "hsd/catalog.hpp"
#include "hsd/complex.hpp"

namespace hsd {

/// Point on the circular arc {Arg((1+z)/(1-z)) = gamma} through -1 and 1,
/// parametrized by t = |(1+z)/(1-z)| > 0. `w` is the R-th power of that
/// half-plane coordinate and `beta = w / Re w = 1 + i tan(R gamma)`.
struct CurvePoint {
    double gamma = 0.0;
    double t = 0.0;
    cplx z{};
    cplx w{};
    cplx beta{};
};

CurvePoint curve_point(const FamilyParams& p, double gamma, double t);

struct CurveSample {
    CurvePoint point;
    double scaled;  // direct harmonic-Schwarzian pipeline value at point.z
};

/// Scaled Schwarzian of the extremal map along one constant-argument curve.
/// The scaled value is constant on each curve; tests pin that down.
std::vector<CurveSample> curve_samples(const FamilyParams& p, double gamma,
                                       std::span<const double> ts);

/// Closed-form scaled Schwarzian of the extremal map:
/// |2(1-a^2) + 2R(R-a) beta - (3/2) R^2 beta^2| ((1-|z|^2)/|1-z^2|)^2.
/// An independent route to the same number as the jet pipeline.
double closed_form_scaled(const FamilyParams& p, cplx z);

/// Coefficients governing the extremal family's scaled Schwarzian:
/// phi(x) = A + Bx + Cx^2 along beta, its squared-modulus expansion
/// At + Bt |beta|^2 + Ct |beta|^4, and the tan^2 coefficient K of the
/// trigonometric radial profile. At + Bt + Ct = lambda^2 and K > 0.
struct FamilyCoefficients {
    double A, B, C;
    double At, Bt, Ct;
    double K;

    static FamilyCoefficients from(const FamilyParams& p);
};

/// Radial profile on the imaginary axis, both routes:
/// phi_form = |phi(beta_r)| ((1-r^2)/(1+r^2))^2 and trig_form its square
/// written with cos/tan only. phi_form^2 == trig_form.
struct PsiForms {
    double phi_form;
    double trig_form;
};

PsiForms psi_profile(const FamilyParams& p, double r);

/// Dense check that the squared radial profile never exceeds its value at 0.
/// `in_verified_regime` flags parameter ranges where the monotonicity is
/// backed by analysis (R = 1, or lambda <= 3/2 with a < 1); outside it the
/// report is still produced, it just carries no guarantee.
struct PsiMonotoneReport {
    bool in_verified_regime;
    bool pass;             // no violation above 1e-9
    double max_violation;  // max(Psi(r) - Psi(0), 0) over the sample grid
    double argmax_r;
    int samples;
};

PsiMonotoneReport psi_monotone_check(const FamilyParams& p, int samples = 10000);

}  // namespace hsd
