#include "hsd/catalog.hpp"

#include <cmath>

#include "hsd/errors.hpp"

namespace hsd {

namespace {

const cplx kOne{1.0};

AnalyticMap one_plus_z_pow(double e) { return AnalyticMap::linear_power(1.0, 1.0, e); }
AnalyticMap one_minus_z_pow(double e) { return AnalyticMap::linear_power(1.0, -1.0, e); }

// ((1+z)/(1-z))^e as a product of branch-safe linear powers.
AnalyticMap half_plane_pow(double e) { return one_plus_z_pow(e) * one_minus_z_pow(-e); }

}  // namespace

FamilyParams::FamilyParams(double lambda_in, double R_in)
    : lambda(lambda_in), R(R_in) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw InvalidParameter("family parameter lambda must be >= 0");
    if (!(R >= 0.0 && R <= 1.0))
        throw InvalidParameter("family parameter R must lie in [0, 1]");
    a = std::sqrt(lambda / 2.0 + 1.0 + R * R / 2.0) - R / 2.0;
}

AnalyticMap make_phi_a(double a) {
    if (!(a > 0.0)) throw InvalidParameter("generalized Koebe exponent must be positive");
    const cplx s = 1.0 / (2.0 * a);
    return s * half_plane_pow(a) - s;
}

AnalyticMap make_phi_a_prime(double a) {
    if (!(a > 0.0)) throw InvalidParameter("generalized Koebe exponent must be positive");
    return one_plus_z_pow(a - 1.0) * one_minus_z_pow(-a - 1.0);
}

AnalyticMap make_lens(double R) {
    if (!(R > 0.0 && R <= 1.0)) throw InvalidParameter("lens parameter must lie in (0, 1]");
    if (R == 1.0) return AnalyticMap::identity();
    const AnalyticMap u = half_plane_pow(R);
    return (u - kOne) / (u + kOne);
}

AnalyticMap make_lens_prime(double R) {
    if (!(R > 0.0 && R <= 1.0)) throw InvalidParameter("lens parameter must lie in (0, 1]");
    if (R == 1.0) return AnalyticMap::constant(1.0);
    // l_R' = 4R l^R / ((1-z^2) (l^R + 1)^2) with l = (1+z)/(1-z)
    const AnalyticMap u = half_plane_pow(R);
    const AnalyticMap up1 = u + kOne;
    const AnalyticMap one_minus_z2 =
        AnalyticMap::polynomial({1.0, 1.0}) * AnalyticMap::polynomial({1.0, -1.0});
    return (cplx{4.0 * R} * u) / (one_minus_z2 * up1 * up1);
}

AnalyticMap make_analytic_koebe() {
    return AnalyticMap::identity() * one_minus_z_pow(-2.0);
}

AnalyticMap make_analytic_koebe_prime() {
    return AnalyticMap::polynomial({1.0, 1.0}) * one_minus_z_pow(-3.0);
}

AnalyticMap make_strip() {
    const cplx half{0.5};
    return half * AnalyticMap::linear_log(1.0, 1.0) - half * AnalyticMap::linear_log(1.0, -1.0);
}

AnalyticMap make_strip_prime() {
    return one_plus_z_pow(-1.0) * one_minus_z_pow(-1.0);
}

AnalyticMap make_automorphism(cplx alpha) {
    if (!in_unit_disk(alpha)) throw OutOfDomain("automorphism parameter must lie in the disk");
    return AnalyticMap::mobius(1.0, alpha, std::conj(alpha), 1.0);
}

AnalyticMap make_automorphism_prime(cplx alpha) {
    return make_mobius_prime(1.0, alpha, std::conj(alpha), 1.0);
}

AnalyticMap make_mobius_prime(cplx a, cplx b, cplx c, cplx d) {
    const cplx det = a * d - b * c;
    if (det == 0.0) throw InvalidParameter("Mobius map requires ad - bc != 0");
    if (c == 0.0) return AnalyticMap::constant(a / d);
    // det / (c z + d)^2, written on the base (d + c z) to keep the series rule.
    return det * AnalyticMap::linear_power(d, c, -2.0);
}

HarmonicMap::HarmonicMap(AnalyticMap h, AnalyticMap g, AnalyticMap h_prime,
                         AnalyticMap g_prime, bool normalized)
    : h_(std::move(h)),
      g_(std::move(g)),
      hp_(std::move(h_prime)),
      gp_(std::move(g_prime)),
      normalized_(normalized) {
    const cplx hp0 = hp_(0.0);
    if (hp0 == 0.0) throw NotLocallyUnivalent("harmonic map has h'(0) = 0");
    omega0_ = gp_(0.0) / hp0;
}

cplx HarmonicMap::operator()(cplx z) const { return h_(z) + std::conj(g_(z)); }

Jet3 HarmonicMap::analytic_jet(cplx z) const {
    const Jet3 d = hp_.jet(z);
    return {h_(z), d.f0, d.f1, d.f2};
}

Jet3 HarmonicMap::co_analytic_jet(cplx z) const {
    const Jet3 d = gp_.jet(z);
    return {g_(z), d.f0, d.f1, d.f2};
}

Jet3 HarmonicMap::dilatation_jet(cplx z) const {
    const Jet3 hp = hp_.jet(z);
    if (hp.f0 == 0.0) throw NotLocallyUnivalent("dilatation undefined where h' vanishes");
    return gp_.jet(z) / hp;
}

HarmonicMap as_harmonic(AnalyticMap h, AnalyticMap h_prime, bool normalized) {
    return HarmonicMap(std::move(h), AnalyticMap::constant(0.0), std::move(h_prime),
                       AnalyticMap::constant(0.0), normalized);
}

HarmonicMap affine_span(cplx alpha, cplx beta, AnalyticMap T, AnalyticMap T_prime) {
    if (std::abs(alpha) == std::abs(beta))
        throw InvalidParameter("affine span requires |alpha| != |beta|");
    return HarmonicMap(alpha * T, std::conj(beta) * T, alpha * T_prime,
                       std::conj(beta) * T_prime, false);
}

HarmonicMap make_harmonic_koebe() {
    const AnalyticMap h =
        AnalyticMap::polynomial({0.0, 1.0, -0.5, 1.0 / 6.0}) * one_minus_z_pow(-3.0);
    const AnalyticMap g =
        AnalyticMap::polynomial({0.0, 0.0, 0.5, 1.0 / 6.0}) * one_minus_z_pow(-3.0);
    const AnalyticMap hp = AnalyticMap::polynomial({1.0, 1.0}) * one_minus_z_pow(-4.0);
    const AnalyticMap gp = AnalyticMap::polynomial({0.0, 1.0, 1.0}) * one_minus_z_pow(-4.0);
    return HarmonicMap(h, g, hp, gp, true);
}

HarmonicMap make_f_r(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidParameter("f_r parameter must lie in [0, 1]");
    return HarmonicMap(AnalyticMap::identity(), AnalyticMap::polynomial({0.0, 0.0, r / 2.0}),
                       AnalyticMap::constant(1.0), AnalyticMap::polynomial({0.0, r}), true);
}

HarmonicMap make_extremal(const FamilyParams& p) {
    if (!(p.lambda > 0.0))
        throw InvalidParameter("extremal construction requires lambda > 0");
    const AnalyticMap hp = [&] {
        if (p.R == 0.0) return make_phi_a_prime(p.a);
        if (p.R == 1.0)
            return make_phi_a_prime(p.a) * one_minus_z_pow(-1.0);
        // 1 - lens_R = 2/(l^R + 1) written directly to avoid cancellation.
        const AnalyticMap one_minus_lens =
            AnalyticMap::constant(2.0) / (half_plane_pow(p.R) + kOne);
        return make_phi_a_prime(p.a) / one_minus_lens;
    }();
    const AnalyticMap gp = p.R == 0.0 ? AnalyticMap::constant(0.0) : make_lens(p.R) * hp;
    return HarmonicMap(AnalyticMap::antiderivative(hp), AnalyticMap::antiderivative(gp), hp, gp,
                       true);
}

HarmonicMap precompose(const HarmonicMap& f, const AnalyticMap& sigma,
                       const AnalyticMap& sigma_prime) {
    return HarmonicMap(AnalyticMap::compose(f.analytic_part(), sigma),
                       AnalyticMap::compose(f.co_analytic_part(), sigma),
                       AnalyticMap::compose(f.analytic_prime(), sigma) * sigma_prime,
                       AnalyticMap::compose(f.co_analytic_prime(), sigma) * sigma_prime, false);
}

HarmonicMap koebe_transform(const HarmonicMap& f, cplx zeta) {
    if (!in_unit_disk(zeta)) throw OutOfDomain("Koebe transform center must lie in the disk");
    const cplx hp0 = f.analytic_prime()(zeta);
    if (hp0 == 0.0) throw NotLocallyUnivalent("Koebe transform center has h' = 0");
    const cplx omega = f.co_analytic_prime()(zeta) / hp0;
    if (!(std::abs(omega) < 1.0))
        throw NotSensePreserving("Koebe transform center is not sense-preserving");
    const cplx D = (1.0 - abs_sq(zeta)) * hp0;
    const AnalyticMap sigma = make_automorphism(zeta);
    const AnalyticMap sigma_prime = make_automorphism_prime(zeta);
    const HarmonicMap moved = precompose(f, sigma, sigma_prime);
    const cplx h_at = f.analytic_value(zeta);
    const cplx g_at = f.co_analytic_value(zeta);
    const cplx s = 1.0 / D;
    const cplx sc = 1.0 / std::conj(D);
    return HarmonicMap(s * moved.analytic_part() - s * h_at,
                       sc * moved.co_analytic_part() - sc * g_at,
                       s * moved.analytic_prime(), sc * moved.co_analytic_prime(), true);
}

HarmonicMap affine_change(const HarmonicMap& f, cplx eps) {
    if (!in_unit_disk(eps)) throw OutOfDomain("affine change parameter must lie in the disk");
    const cplx g1 = f.co_analytic_prime()(0.0);
    const cplx c = 1.0 - std::conj(eps) * g1;
    if (std::abs(c) < 1e-12)
        throw InvalidParameter("affine change is degenerate: 1 - conj(eps) g'(0) ~ 0");
    const cplx s = 1.0 / c;
    const cplx sc = 1.0 / std::conj(c);
    const cplx e = eps;
    return HarmonicMap(s * f.analytic_part() - (std::conj(e) * s) * f.co_analytic_part(),
                       sc * f.co_analytic_part() - (e * sc) * f.analytic_part(),
                       s * f.analytic_prime() - (std::conj(e) * s) * f.co_analytic_prime(),
                       sc * f.co_analytic_prime() - (e * sc) * f.analytic_prime(),
                       f.normalized());
}

}  // namespace hsd
