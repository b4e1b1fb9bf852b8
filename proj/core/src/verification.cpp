#include "hsd/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "hsd/catalog.hpp"
#include "hsd/curves.hpp"
#include "hsd/families.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"

namespace hsd {

namespace {

constexpr unsigned kSeed = 0x5eed5u;

cplx random_disk_point(std::mt19937& rng, double rmax) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = rmax * std::sqrt(unit(rng));
    const double t = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, t);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// Largest relative component discrepancy between two jets.
double jet_discrepancy(const Jet3& x, const Jet3& y) {
    const cplx dx[4] = {x.f0 - y.f0, x.f1 - y.f1, x.f2 - y.f2, x.f3 - y.f3};
    const cplx rx[4] = {x.f0, x.f1, x.f2, x.f3};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(dx[i]) / std::max(1.0, std::abs(rx[i])));
    return worst;
}

CheckResult check_witness_norms() {
    const auto k = sup_norm(schwarzian_field(
        as_harmonic(make_analytic_koebe(), make_analytic_koebe_prime(), true)));
    const auto s = sup_norm(schwarzian_field(as_harmonic(make_strip(), make_strip_prime(), true)));
    const bool pass = std::abs(k.value - 6.0) <= 1e-6 && std::abs(s.value - 2.0) <= 1e-6;
    return {1, "Schwarzian norms of the Koebe and strip witnesses (6, 2)", pass,
            "koebe=" + fmt(k.value) + " strip=" + fmt(s.value) + " tol=1e-6"};
}

CheckResult check_shear_witness_norm() {
    const auto est = sup_norm(schwarzian_field(make_f_r(1.0)));
    const bool pass = std::abs(est.value - 1.5) <= 1e-6 && !est.attained &&
                      std::abs(est.argmax) > 0.999;
    return {2, "norm 3/2 of z + conj(z)^2/2, reached only in the radial limit", pass,
            "value=" + fmt(est.value) + " attained=" + (est.attained ? "true" : "false") +
                " |argmax|=" + fmt(std::abs(est.argmax))};
}

CheckResult check_harmonic_koebe() {
    const HarmonicMap K = make_harmonic_koebe();
    const auto est = sup_norm(schwarzian_field(K));
    const double a2 = (K.analytic_derivative_jet(0.0).f1 / 2.0).real();
    const bool pass = std::abs(est.value - 9.5) <= 1e-5 && a2 == 2.5;
    return {3, "harmonic Koebe: Schwarzian norm 19/2 and a2 = 5/2 exactly", pass,
            "norm=" + fmt(est.value) + " a2=" + fmt(a2)};
}

CheckResult check_extremal_norms() {
    const double sets[4][2] = {{1.5, 1.0}, {6.0, 1.0}, {9.5, 1.0}, {1.0, 0.9}};
    bool pass = true;
    std::string detail;
    for (const auto& s : sets) {
        const FamilyParams p(s[0], s[1]);
        const auto est = sup_norm(schwarzian_field(make_extremal(p)));
        const bool ok = std::abs(est.value - p.lambda) <= 1e-5 && est.attained &&
                        std::abs(est.argmax) <= 1e-3;
        pass = pass && ok;
        detail += "(" + fmt(p.lambda) + "," + fmt(p.R) + ")->" + fmt(est.value) +
                  (est.attained ? "@0 " : "@boundary ");
    }
    return {4, "extremal family reaches norm lambda on the interior plateau", pass, detail};
}

CheckResult check_extremal_matches_harmonic_koebe() {
    std::mt19937 rng(kSeed);
    const HarmonicMap f0 = make_extremal(FamilyParams(9.5, 1.0));
    const HarmonicMap K = make_harmonic_koebe();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_disk_point(rng, 0.7);
        worst = std::max(worst, jet_discrepancy(f0.analytic_derivative_jet(z),
                                                K.analytic_derivative_jet(z)));
        worst = std::max(worst, jet_discrepancy(f0.co_analytic_derivative_jet(z),
                                                K.co_analytic_derivative_jet(z)));
    }
    return {5, "extremal at (19/2, 1) coincides with the harmonic Koebe shear",
            worst < 1e-10, "max jet discrepancy " + fmt(worst) + " over 20 points"};
}

CheckResult check_curve_constancy() {
    const FamilyParams p(1.0, 0.9);
    const double gammas[4] = {0.0, 0.3, 0.7, 1.2};
    const double ts[5] = {0.25, 0.5, 1.0, 2.0, 4.0};
    bool pass = true;
    std::string detail;
    for (const double g : gammas) {
        const auto samples = curve_samples(p, g, ts);
        double lo = samples[0].scaled, hi = samples[0].scaled;
        for (const auto& s : samples) {
            lo = std::min(lo, s.scaled);
            hi = std::max(hi, s.scaled);
        }
        const double spread = (hi - lo) / hi;
        pass = pass && spread <= 1e-8;
        detail += "gamma=" + fmt(g) + " spread=" + fmt(spread) + " ";
        if (g == 0.0) pass = pass && std::abs(hi - p.lambda) <= 1e-9 * p.lambda;
    }
    return {6, "scaled Schwarzian of the extremal is constant on each arc", pass, detail};
}

CheckResult check_closed_form_routes() {
    std::mt19937 rng(kSeed + 1);
    bool pass = true;
    std::string detail;
    for (const FamilyParams p : {FamilyParams(1.0, 0.9), FamilyParams(6.0, 1.0)}) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const cplx z = random_disk_point(rng, 0.97);
            const double direct = schwarzian_scaled(make_extremal(p), z);
            const double closed = closed_form_scaled(p, z);
            worst = std::max(worst, std::abs(direct - closed) / (1.0 + direct));
        }
        pass = pass && worst <= 1e-9;

        double worst_psi = 0.0;
        for (int i = 0; i < 99; ++i) {
            const auto forms = psi_profile(p, 0.01 * (i + 1));
            worst_psi = std::max(worst_psi,
                                 std::abs(forms.phi_form * forms.phi_form - forms.trig_form) /
                                     (1.0 + forms.trig_form));
        }
        pass = pass && worst_psi <= 1e-9;

        const auto c = FamilyCoefficients::from(p);
        const double sum_err =
            std::abs(c.At + c.Bt + c.Ct - p.lambda * p.lambda) / std::max(1.0, p.lambda * p.lambda);
        pass = pass && sum_err <= 1e-9;
        detail += "route=" + fmt(worst) + " psi=" + fmt(worst_psi) + " coeff=" + fmt(sum_err) + " ";
    }
    return {7, "closed-form route agrees with the jet pipeline", pass, detail};
}

CheckResult check_order_formulas() {
    const double oH = analytic_order(6.0);
    const auto oF95 = harmonic_order(9.5);
    const auto oF15 = harmonic_order(1.5);
    const double R = dilatation_sup_from_order(9.5, 3.0);
    const bool pass = oH == 2.0 && std::abs(oF95.order - 3.0) < 1e-12 &&
                      std::abs(oF95.half_order - 2.5) < 1e-12 &&
                      std::abs(oF15.order - 2.0) < 1e-12 && std::abs(R - 1.0) < 1e-12;
    return {8, "order formulas at lambda = 6, 19/2, 3/2 and the inverse relation", pass,
            "analytic(6)=" + fmt(oH) + " harmonic(19/2)=" + fmt(oF95.order) + "/" +
                fmt(oF95.half_order) + " harmonic(3/2)=" + fmt(oF15.order) +
                " R(19/2,3)=" + fmt(R)};
}

CheckResult check_marty_relation() {
    bool pass = true;
    std::string detail;
    for (const double lambda : {1.5, 6.0, 9.5}) {
        const double res = marty_residual(extremal_coefficients(FamilyParams(lambda, 1.0)));
        pass = pass && res <= 1e-8;
        detail += "f0(" + fmt(lambda) + ")=" + fmt(res) + " ";
    }
    for (const double a : {1.5, 2.0, 3.0}) {
        const Series s = make_phi_a(a).series(4);
        const double res = marty_residual({s[2], s[3], 0.0});
        pass = pass && res <= 1e-8;
        detail += "phi(" + fmt(a) + ")=" + fmt(res) + " ";
    }
    return {9, "Marty residual vanishes at the extremal coefficients", pass, detail};
}

struct PropertyOutcome {
    int failures = 0;
    double worst = 0.0;
    void feed(double err, double tol) {
        worst = std::max(worst, err);
        if (err > tol) ++failures;
    }
};

CheckResult check_property_suites() {
    constexpr int kCases = 1000;
    std::mt19937 rng(kSeed + 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::ostringstream detail;
    bool pass = true;

    // Mobius kernel: the Schwarzian annihilates alpha T + beta conj(T).
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const cplx c = random_disk_point(rng, 0.8);
            const cplx d{1.0};
            cplx a, b;
            do {
                a = random_disk_point(rng, 1.0) + cplx{0.2};
                b = random_disk_point(rng, 1.0);
            } while (std::abs(a * d - b * c) < 0.05);
            const cplx alpha = std::polar(0.3 + 0.9 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            const cplx beta = alpha * (0.8 * unit(rng)) *
                              std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
            const HarmonicMap f =
                affine_span(alpha, beta, AnalyticMap::mobius(a, b, c, d),
                            make_mobius_prime(a, b, c, d));
            out.feed(std::abs(schwarzian(f, random_disk_point(rng, 0.9)).value), 1e-10);
        }
        pass = pass && out.failures == 0;
        detail << "kernel=" << fmt(out.worst) << " ";
    }

    const HarmonicMap pool[4] = {make_harmonic_koebe(), make_f_r(0.7),
                                 make_extremal(FamilyParams(1.0, 0.9)),
                                 make_extremal(FamilyParams(6.0, 1.0))};

    // Affine invariance of the harmonic Schwarzian.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const HarmonicMap& f = pool[i % 4];
            const HarmonicMap fa = affine_change(f, random_disk_point(rng, 0.9));
            const cplx z = random_disk_point(rng, 0.9);
            const cplx s0 = schwarzian(f, z).value;
            const cplx s1 = schwarzian(fa, z).value;
            out.feed(std::abs(s0 - s1) / (1.0 + std::abs(s0)), 1e-9);
        }
        pass = pass && out.failures == 0;
        detail << "affine=" << fmt(out.worst) << " ";
    }

    // Pre-composition with automorphisms preserves the scaled value.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const HarmonicMap& f = pool[i % 4];
            const cplx alpha = random_disk_point(rng, 0.9);
            const HarmonicMap moved =
                precompose(f, make_automorphism(alpha), make_automorphism_prime(alpha));
            const double lhs = std::abs(schwarzian(moved, cplx{}).value);
            const double rhs = schwarzian_scaled(f, alpha);
            out.feed(std::abs(lhs - rhs) / (1.0 + rhs), 1e-9);
        }
        pass = pass && out.failures == 0;
        detail << "move=" << fmt(out.worst) << " ";
    }

    // Chain rule for the hyperbolic derivative.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const AnalyticMap phi =
                i % 2 ? make_lens(0.2 + 0.7 * unit(rng)) : make_automorphism(random_disk_point(rng, 0.8));
            const AnalyticMap omega =
                i % 3 ? make_automorphism(random_disk_point(rng, 0.8)) : make_lens(0.5);
            const cplx z = random_disk_point(rng, 0.9);
            const cplx lhs = hyperbolic_derivative(AnalyticMap::compose(phi, omega), z);
            const cplx rhs = hyperbolic_derivative(phi, omega(z)) * hyperbolic_derivative(omega, z);
            out.feed(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), 1e-10);
        }
        pass = pass && out.failures == 0;
        detail << "chain=" << fmt(out.worst) << " ";
    }

    // Schwarz-Pick bound for catalog dilatations.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const AnalyticMap omega = [&]() -> AnalyticMap {
                switch (i % 3) {
                    case 0: return make_lens(0.1 + 0.85 * unit(rng));
                    case 1: return make_automorphism(random_disk_point(rng, 0.9));
                    default:
                        return AnalyticMap::compose(make_automorphism(random_disk_point(rng, 0.7)),
                                                    make_lens(0.3 + 0.6 * unit(rng)));
                }
            }();
            const double v = std::abs(hyperbolic_derivative(omega, random_disk_point(rng, 0.95)));
            out.feed(std::max(0.0, v - 1.0), 1e-12);
        }
        pass = pass && out.failures == 0;
        detail << "pick=" << fmt(out.worst) << " ";
    }

    // Lens maps keep hyperbolic derivative of modulus alpha on the real axis.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const double alpha = 0.05 + 0.9 * unit(rng);
            const double r = 0.999 * unit(rng);
            const double v = std::abs(hyperbolic_derivative(make_lens(alpha), cplx{r}));
            out.feed(std::abs(v - alpha) / alpha, 1e-10);
        }
        pass = pass && out.failures == 0;
        detail << "lens=" << fmt(out.worst) << " ";
    }

    // g''(0) = omega'(0) whenever the dilatation vanishes at the origin.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const HarmonicMap f = [&]() -> HarmonicMap {
                switch (i % 3) {
                    case 0: return make_f_r(unit(rng));
                    case 1:
                        return make_extremal(
                            FamilyParams(0.2 + 8.0 * unit(rng), 0.1 + 0.9 * unit(rng)));
                    default: {
                        const HarmonicMap& base = pool[i % 4];
                        const HarmonicMap k = koebe_transform(base, random_disk_point(rng, 0.6));
                        return affine_change(k, k.dilatation_at_origin());
                    }
                }
            }();
            out.feed(std::abs(f.dilatation_at_origin()), 1e-12);
            const cplx gpp = f.co_analytic_derivative_jet(0.0).f1;
            const cplx wp = f.dilatation_jet(0.0).f1;
            out.feed(std::abs(gpp - wp) / (1.0 + std::abs(wp)), 1e-10);
        }
        pass = pass && out.failures == 0;
        detail << "shear=" << fmt(out.worst) << " ";
    }

    // With a constant co-analytic part the harmonic Schwarzian is Sh.
    {
        PropertyOutcome out;
        for (int i = 0; i < kCases; ++i) {
            const auto [h, hp] = [&]() -> std::pair<AnalyticMap, AnalyticMap> {
                switch (i % 3) {
                    case 0: {
                        const double a = 0.5 + 3.0 * unit(rng);
                        return {make_phi_a(a), make_phi_a_prime(a)};
                    }
                    case 1: return {make_analytic_koebe(), make_analytic_koebe_prime()};
                    default: return {make_strip(), make_strip_prime()};
                }
            }();
            const HarmonicMap f = as_harmonic(h, hp, false);
            const cplx z = random_disk_point(rng, 0.9);
            const cplx direct = schwarzian(f.analytic_jet(z));
            const cplx via_pipeline = schwarzian(f, z).value;
            out.feed(std::abs(direct - via_pipeline) / (1.0 + std::abs(direct)), 1e-14);
        }
        pass = pass && out.failures == 0;
        detail << "analytic=" << fmt(out.worst);
    }

    return {10, "randomized property suites (1000 cases each)", pass, detail.str()};
}

CheckResult check_psi_monotone() {
    const double sets[4][2] = {{1.5, 1.0}, {6.0, 1.0}, {9.5, 1.0}, {1.0, 0.9}};
    bool pass = true;
    std::string detail;
    for (const auto& s : sets) {
        const auto rep = psi_monotone_check(FamilyParams(s[0], s[1]), 10000);
        pass = pass && rep.pass && rep.in_verified_regime;
        detail += "(" + fmt(s[0]) + "," + fmt(s[1]) + ") violation=" + fmt(rep.max_violation) + " ";
    }
    return {11, "squared radial profile never exceeds its value at 0", pass, detail};
}

}  // namespace

std::vector<CheckResult> acceptance_checks() {
    return {check_witness_norms(),
            check_shear_witness_norm(),
            check_harmonic_koebe(),
            check_extremal_norms(),
            check_extremal_matches_harmonic_koebe(),
            check_curve_constancy(),
            check_closed_form_routes(),
            check_order_formulas(),
            check_marty_relation(),
            check_property_suites(),
            check_psi_monotone()};
}

bool run_acceptance(std::ostream& out) {
    bool all = true;
    for (const CheckResult& c : acceptance_checks()) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << c.detail
            << ")\n";
        all = all && c.pass;
    }
    out << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all;
}

}  // namespace hsd
