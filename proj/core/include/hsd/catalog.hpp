#pragma once

#include <optional>

#include "hsd/analytic_map.hpp"
#include "hsd/complex.hpp"
#include "hsd/jet.hpp"

namespace hsd {

/// Parameters of the two-parameter extremal family: lambda >= 0 is the target
/// Schwarzian norm, R in [0, 1] the hyperbolic norm of the prescribed lens
/// dilatation, and a = sqrt(lambda/2 + 1 + R^2/2) - R/2 the generalized-Koebe
/// exponent that makes the construction close.
struct FamilyParams {
    double lambda;
    double R;
    double a;

    FamilyParams(double lambda, double R);
};

// --- analytic catalog -------------------------------------------------------

/// Generalized Koebe function ((1+z)/(1-z))^a rescaled so that
/// phi_a(0) = 0, phi_a'(0) = 1. Requires a > 0.
AnalyticMap make_phi_a(double a);
AnalyticMap make_phi_a_prime(double a);

/// Lens map of parameter R in (0, 1]; a self-map of the disk with hyperbolic
/// norm exactly R. R = 1 gives the identity exactly.
AnalyticMap make_lens(double R);
AnalyticMap make_lens_prime(double R);

AnalyticMap make_analytic_koebe();        // z / (1-z)^2
AnalyticMap make_analytic_koebe_prime();  // (1+z) / (1-z)^3
AnalyticMap make_strip();                 // (1/2) log((1+z)/(1-z))
AnalyticMap make_strip_prime();           // 1 / (1-z^2)

/// Disk automorphism sigma_alpha(z) = (alpha + z)/(1 + conj(alpha) z).
AnalyticMap make_automorphism(cplx alpha);
AnalyticMap make_automorphism_prime(cplx alpha);

/// Derivative tree of a general Mobius map (a z + b)/(c z + d).
AnalyticMap make_mobius_prime(cplx a, cplx b, cplx c, cplx d);

// --- harmonic mappings ------------------------------------------------------

/// Sense-preserving harmonic mapping h + conj(g). Both parts are carried
/// together with explicit closed-form derivative maps, so third-order data of
/// h and g (and hence second-order data of the dilatation) is available
/// everywhere without numerical differentiation.
class HarmonicMap {
  public:
    HarmonicMap(AnalyticMap h, AnalyticMap g, AnalyticMap h_prime, AnalyticMap g_prime,
                bool normalized);

    cplx operator()(cplx z) const;  // h(z) + conj(g(z))

    cplx analytic_value(cplx z) const { return h_(z); }
    cplx co_analytic_value(cplx z) const { return g_(z); }

    /// Jet of h' at z, i.e. (h', h'', h''', h'''').
    Jet3 analytic_derivative_jet(cplx z) const { return hp_.jet(z); }
    Jet3 co_analytic_derivative_jet(cplx z) const { return gp_.jet(z); }

    /// Jet of h at z (value via the h evaluator, derivatives via h').
    Jet3 analytic_jet(cplx z) const;
    Jet3 co_analytic_jet(cplx z) const;

    /// Jet of the dilatation omega = g'/h' at z; all four components valid.
    Jet3 dilatation_jet(cplx z) const;
    AnalyticMap dilatation() const { return gp_ / hp_; }
    cplx dilatation_at_origin() const { return omega0_; }

    bool normalized() const { return normalized_; }

    const AnalyticMap& analytic_part() const { return h_; }
    const AnalyticMap& co_analytic_part() const { return g_; }
    const AnalyticMap& analytic_prime() const { return hp_; }
    const AnalyticMap& co_analytic_prime() const { return gp_; }

  private:
    AnalyticMap h_, g_, hp_, gp_;
    bool normalized_;
    cplx omega0_;
};

/// Wrap an analytic map as a harmonic one (co-analytic part identically 0).
HarmonicMap as_harmonic(AnalyticMap h, AnalyticMap h_prime, bool normalized);

/// alpha T + beta conj(T) for an analytic T with derivative T'; in canonical
/// form this is h = alpha T, g = conj(beta) T. Sense-preserving needs
/// |beta| < |alpha|.
HarmonicMap affine_span(cplx alpha, cplx beta, AnalyticMap T, AnalyticMap T_prime);

/// Shear of the analytic Koebe function with dilatation omega(z) = z:
/// h - g = z/(1-z)^2 and g' = z h'.
HarmonicMap make_harmonic_koebe();

/// f_r = z + (r/2) conj(z)^2 for r in [0, 1].
HarmonicMap make_f_r(double r);

/// The extremal mapping of the family: h', g' solve
///   h - g = phi_a,   g'/h' = lens_R,
/// which gives h' = phi_a' / (1 - lens_R) and g' = lens_R h'. Requires
/// lambda > 0. Values of h and g are produced by quadrature on demand.
HarmonicMap make_extremal(const FamilyParams& p);

/// Pre-composition f∘sigma for an analytic self-map; not renormalized.
HarmonicMap precompose(const HarmonicMap& f, const AnalyticMap& sigma,
                       const AnalyticMap& sigma_prime);

/// Koebe transform: renormalized pre-composition with the automorphism
/// moving 0 to zeta. The result is normalized.
HarmonicMap koebe_transform(const HarmonicMap& f, cplx zeta);

/// Affine change A_eps(f) = (f - conj(eps f)) / (1 - conj(eps) g'(0));
/// the analytic part keeps derivative 1 at the origin.
HarmonicMap affine_change(const HarmonicMap& f, cplx eps);

}  // namespace hsd
