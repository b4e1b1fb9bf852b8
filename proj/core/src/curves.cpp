#include "hsd/curves.hpp"

#include <cmath>
#include <numbers>

#include "hsd/errors.hpp"
#include "hsd/schwarzian.hpp"

namespace hsd {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// beta blows up as R*gamma approaches pi/2; cap the tangent argument there.
constexpr double kTanCap = kHalfPi - 1e-6;

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma < kHalfPi))
        throw InvalidParameter("curve argument gamma must lie in [0, pi/2)");
}

double checked_tan(double x) {
    if (!(std::abs(x) < kTanCap))
        throw InvalidParameter("tangent argument too close to pi/2; beta degenerates");
    return std::tan(x);
}

}  // namespace

CurvePoint curve_point(const FamilyParams& p, double gamma, double t) {
    check_gamma(gamma);
    if (!(t > 0.0)) throw InvalidParameter("curve parameter t must be positive");
    CurvePoint out;
    out.gamma = gamma;
    out.t = t;
    const cplx W = std::polar(t, gamma);           // (1+z)/(1-z)
    out.z = (W - 1.0) / (W + 1.0);
    out.w = std::polar(std::pow(t, p.R), p.R * gamma);
    out.beta = cplx{1.0, checked_tan(p.R * gamma)};
    return out;
}

std::vector<CurveSample> curve_samples(const FamilyParams& p, double gamma,
                                       std::span<const double> ts) {
    check_gamma(gamma);
    const HarmonicMap f0 = make_extremal(p);
    std::vector<CurveSample> out;
    out.reserve(ts.size());
    for (const double t : ts) {
        CurveSample s{curve_point(p, gamma, t), 0.0};
        if (!in_unit_disk(s.point.z))
            throw OutOfDomain("curve point left the unit disk");
        s.scaled = schwarzian_scaled(f0, s.point.z);
        out.push_back(s);
    }
    return out;
}

double closed_form_scaled(const FamilyParams& p, cplx z) {
    if (!in_unit_disk(z)) throw OutOfDomain("closed form needs |z| < 1");
    const auto c = FamilyCoefficients::from(p);
    const cplx one_plus = 1.0 + z;
    const cplx one_minus = 1.0 - z;
    const cplx W = one_plus / one_minus;
    const cplx w = std::pow(W, p.R);  // Re w > 0 on the disk for R in [0,1]
    const cplx beta = w / w.real();
    const cplx phi = c.A + c.B * beta + c.C * beta * beta;
    const double ratio = (1.0 - abs_sq(z)) / (std::abs(one_plus) * std::abs(one_minus));
    return std::abs(phi) * ratio * ratio;
}

FamilyCoefficients FamilyCoefficients::from(const FamilyParams& p) {
    FamilyCoefficients c{};
    const double a = p.a, R = p.R;
    c.A = 2.0 * (1.0 - a * a);
    c.B = 2.0 * R * (R - a);
    c.C = -1.5 * R * R;
    c.At = 4.0 * (1.0 - a * a) * (1.0 - (a + R) * (a + R));
    c.Bt = 2.0 * R * R * (3.0 - a * R - a * a - R * R);
    c.Ct = 2.25 * R * R * R * R;
    c.K = R * R * R * R + 4.0 * a * a * R * R + 4.0 * a * R * R * R - 3.0 * R * R * p.lambda;
    return c;
}

PsiForms psi_profile(const FamilyParams& p, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw InvalidParameter("radial profile needs r in [0, 1)");
    const auto c = FamilyCoefficients::from(p);
    const double gamma_r = std::atan2(2.0 * r, 1.0 - r * r);  // cos = (1-r^2)/(1+r^2)
    const double cg = (1.0 - r * r) / (1.0 + r * r);
    const double tg = checked_tan(p.R * gamma_r);
    const cplx beta{1.0, tg};

    const cplx phi = c.A + c.B * beta + c.C * beta * beta;
    const double phi_form = std::abs(phi) * cg * cg;

    const double cg4 = cg * cg * cg * cg;
    const double trig_form =
        p.lambda * p.lambda * cg4 + c.K * tg * tg * cg4 + c.Ct * tg * tg * tg * tg * cg4;
    return {phi_form, trig_form};
}

PsiMonotoneReport psi_monotone_check(const FamilyParams& p, int samples) {
    if (samples < 2) throw InvalidParameter("monotone check needs at least two samples");
    PsiMonotoneReport rep{};
    rep.samples = samples;
    rep.in_verified_regime =
        p.R == 1.0 || (p.lambda <= 1.5 && p.a < 1.0 && p.R < 1.0);
    const double psi0 = psi_profile(p, 0.0).trig_form;
    rep.max_violation = 0.0;
    rep.argmax_r = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double r = static_cast<double>(i) / samples;
        const double excess = psi_profile(p, r).trig_form - psi0;
        if (excess > rep.max_violation) {
            rep.max_violation = excess;
            rep.argmax_r = r;
        }
    }
    rep.pass = rep.max_violation <= 1e-9;
    return rep;
}

}  // namespace hsd
