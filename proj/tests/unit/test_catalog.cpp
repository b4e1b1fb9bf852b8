#include <cmath>
#include <random>

#include "doctest.h"
#include "hsd/catalog.hpp"
#include "hsd/fd.hpp"
#include "hsd/schwarzian.hpp"
#include "test_helpers.hpp"

using namespace hsd;
using hsd::testing::check_close;
using hsd::testing::check_jet;
using hsd::testing::random_disk_point;

TEST_SUITE("catalog") {
    TEST_CASE("generalized Koebe normalization and second derivative") {
        const double lambda = 6.0;
        const double a = std::sqrt(1.0 + lambda / 2.0);
        const Jet3 j = make_phi_a(a).jet(0.0);
        check_close(j.f0, 0.0, 1e-12);
        check_close(j.f1, 1.0, 1e-12);
        check_close(0.5 * std::abs(j.f2), std::sqrt(1.0 + lambda / 2.0), 1e-12);
        CHECK_THROWS_AS(make_phi_a(0.0), InvalidParameter);
    }

    TEST_CASE("exponent 2 collapses to the analytic Koebe function") {
        std::mt19937 rng(hsd::testing::kSeed + 20);
        const AnalyticMap phi2 = make_phi_a(2.0);
        const AnalyticMap k = make_analytic_koebe();
        for (int i = 0; i < 10; ++i) {
            const cplx z = random_disk_point(rng, 0.9);
            check_close(phi2(z), k(z), 1e-12 * std::max(1.0, std::abs(k(z))));
        }
    }

    TEST_CASE("lens maps") {
        CHECK_THROWS_AS(make_lens(0.0), InvalidParameter);
        CHECK_THROWS_AS(make_lens(1.2), InvalidParameter);

        std::mt19937 rng(hsd::testing::kSeed + 21);
        // R = 1 is exactly the identity
        const AnalyticMap l1 = make_lens(1.0);
        for (int i = 0; i < 5; ++i) {
            const cplx z = random_disk_point(rng, 0.95);
            check_close(l1(z), z, 0.0);
        }
        for (const double R : {0.25, 0.6, 0.9}) {
            const AnalyticMap l = make_lens(R);
            check_close(l(0.0), 0.0, 1e-15);
            check_close(fd_oracle(l, 0.0).f1, R, 1e-9);
            check_close(l.jet(0.0).f1, R, 1e-14);
            // the derivative tree is the jet's derivative
            const cplx z = random_disk_point(rng, 0.7);
            check_close(make_lens_prime(R)(z), l.jet(z).f1, 1e-12);
        }
    }

    TEST_CASE("harmonic Koebe data") {
        const HarmonicMap K = make_harmonic_koebe();
        const Jet3 hp = K.analytic_derivative_jet(0.0);
        CHECK(hp.f1.real() / 2.0 == 2.5);  // a2 exactly
        check_close(K.analytic_part().series(4)[3], 14.0 / 3.0, 1e-13);  // a3
        check_close(K.analytic_derivative_jet(0.0).f2 / 6.0, 14.0 / 3.0, 1e-12);

        // dilatation is the identity by construction
        std::mt19937 rng(hsd::testing::kSeed + 22);
        const cplx z{0.3, 0.2};
        check_close(K.dilatation_jet(z).f0, z, 1e-14);
        for (int i = 0; i < 20; ++i) {
            const cplx w = random_disk_point(rng, 0.9);
            check_close(K.dilatation_jet(w).f0, w, 1e-12);
        }
        // h - g is the analytic Koebe function
        const AnalyticMap k = make_analytic_koebe();
        for (int i = 0; i < 20; ++i) {
            const cplx w = random_disk_point(rng, 0.8);
            check_close(K.analytic_value(w) - K.co_analytic_value(w), k(w),
                        1e-12 * std::max(1.0, std::abs(k(w))));
        }
    }

    TEST_CASE("shear family f_r") {
        CHECK_THROWS_AS(make_f_r(-0.1), InvalidParameter);
        CHECK_THROWS_AS(make_f_r(1.5), InvalidParameter);

        const HarmonicMap f1 = make_f_r(1.0);
        const cplx z{0.25, -0.55};
        // closed form of the harmonic Schwarzian of z + conj(z)^2/2
        const cplx zb = std::conj(z);
        const double d = 1.0 - abs_sq(z);
        check_close(schwarzian(f1, z).value, -1.5 * zb * zb / (d * d), 1e-13);

        const HarmonicMap f0 = make_f_r(0.0);
        check_close(f0.co_analytic_value(z), 0.0, 0.0);
        check_close(schwarzian(f0, z).value, 0.0, 0.0);

        // dilatation rz: hyperbolic derivative has modulus r at the origin
        for (const double r : {0.3, 0.8}) {
            const HarmonicMap fr = make_f_r(r);
            check_close(hyperbolic_derivative(fr.dilatation(), 0.0), r, 1e-13);
            const Jet3 fd = fd_oracle(fr.dilatation(), cplx{0.1, 0.1});
            check_close(fd.f1, r, 1e-9);
        }
    }

    TEST_CASE("family parameters") {
        CHECK_THROWS_AS(FamilyParams(-1.0, 0.5), InvalidParameter);
        CHECK_THROWS_AS(FamilyParams(1.0, 1.5), InvalidParameter);
        const FamilyParams p(1.0, 0.9);
        check_close(p.a, std::sqrt(1.905) - 0.45, 1e-15);
        CHECK(p.a + p.R > 1.0);
        const FamilyParams q(9.5, 1.0);
        check_close(q.a, 2.0, 1e-15);
    }

    TEST_CASE("extremal construction basics") {
        CHECK_THROWS_AS(make_extremal(FamilyParams(0.0, 0.0)), InvalidParameter);
        for (const auto& [lambda, R] : {std::pair{9.5, 1.0}, {1.0, 0.9}, {3.0, 0.4}}) {
            const FamilyParams p(lambda, R);
            const HarmonicMap f0 = make_extremal(p);
            // normalization
            check_close(f0.analytic_value(0.0), 0.0, 1e-12);
            check_close(f0.co_analytic_value(0.0), 0.0, 1e-12);
            check_close(f0.analytic_derivative_jet(0.0).f0, 1.0, 1e-12);
            check_close(f0.co_analytic_derivative_jet(0.0).f0, 0.0, 1e-12);
            // h''(0) = 2a + R
            check_close(f0.analytic_derivative_jet(0.0).f1, 2.0 * p.a + p.R, 1e-11);
            // Sh(0) = 2 + R^2/2 - 2aR - 2a^2
            const cplx sh0 = schwarzian(f0.analytic_jet(0.0));
            check_close(sh0, 2.0 + R * R / 2.0 - 2.0 * p.a * R - 2.0 * p.a * p.a, 1e-11);
            // dilatation is the lens map
            check_close(f0.dilatation_jet(0.0).f1, R, 1e-12);
        }
    }

    TEST_CASE("extremal at (19/2, 1) is the harmonic Koebe mapping") {
        std::mt19937 rng(hsd::testing::kSeed + 23);
        const HarmonicMap f0 = make_extremal(FamilyParams(9.5, 1.0));
        const HarmonicMap K = make_harmonic_koebe();
        for (int i = 0; i < 20; ++i) {
            const cplx z = random_disk_point(rng, 0.7);
            const Jet3 a = f0.analytic_derivative_jet(z);
            const Jet3 b = K.analytic_derivative_jet(z);
            check_close(a.f0, b.f0, 1e-10 * std::max(1.0, std::abs(b.f0)));
            check_close(a.f1, b.f1, 1e-10 * std::max(1.0, std::abs(b.f1)));
            const Jet3 ga = f0.co_analytic_derivative_jet(z);
            const Jet3 gb = K.co_analytic_derivative_jet(z);
            check_close(ga.f0, gb.f0, 1e-10 * std::max(1.0, std::abs(gb.f0)));
            // values need the quadrature path
            check_close(f0.analytic_value(z), K.analytic_value(z),
                        1e-10 * std::max(1.0, std::abs(K.analytic_value(z))));
        }
    }

    TEST_CASE("Koebe transform") {
        const HarmonicMap K = make_harmonic_koebe();
        CHECK_THROWS_AS(koebe_transform(K, cplx{1.1, 0.0}), OutOfDomain);

        std::mt19937 rng(hsd::testing::kSeed + 24);
        // center 0 leaves the map unchanged
        const HarmonicMap same = koebe_transform(K, 0.0);
        for (int i = 0; i < 10; ++i) {
            const cplx z = random_disk_point(rng, 0.8);
            check_jet(same.analytic_derivative_jet(z), K.analytic_derivative_jet(z), 1e-12);
        }
        // normalization of a generic transform
        for (int i = 0; i < 10; ++i) {
            const cplx zeta = random_disk_point(rng, 0.7);
            const HarmonicMap moved = koebe_transform(K, zeta);
            CHECK(moved.normalized());
            check_close(moved.analytic_value(0.0), 0.0, 1e-11);
            check_close(moved.co_analytic_value(0.0), 0.0, 1e-11);
            check_close(moved.analytic_derivative_jet(0.0).f0, 1.0, 1e-11);
        }
    }

    TEST_CASE("orbit of the generalized Koebe map realizes the family order") {
        // along the real axis the renormalized second coefficient stays a
        const double a = std::sqrt(1.0 + 6.0 / 2.0);
        const HarmonicMap phi = as_harmonic(make_phi_a(a), make_phi_a_prime(a), true);
        double sup = 0.0;
        for (int i = 0; i <= 60; ++i) {
            const double zeta = -0.995 + 1.99 * i / 60.0;
            const HarmonicMap moved = koebe_transform(phi, zeta);
            sup = std::max(sup, 0.5 * std::abs(moved.analytic_derivative_jet(0.0).f1));
        }
        check_close(sup, a, 1e-4);
    }

    TEST_CASE("affine change") {
        const HarmonicMap K = make_harmonic_koebe();
        CHECK_THROWS_AS(affine_change(K, cplx{1.0, 0.2}), OutOfDomain);

        std::mt19937 rng(hsd::testing::kSeed + 25);
        const HarmonicMap same = affine_change(K, 0.0);
        for (int i = 0; i < 5; ++i) {
            const cplx z = random_disk_point(rng, 0.8);
            check_jet(same.analytic_derivative_jet(z), K.analytic_derivative_jet(z), 1e-13);
        }

        // with g'(0) = 0 the new dilatation is sigma_alpha of the old one
        for (int i = 0; i < 20; ++i) {
            const cplx alpha = random_disk_point(rng, 0.8);
            const HarmonicMap feps = affine_change(K, -alpha);  // f + conj(alpha) conj(f)
            const cplx z = random_disk_point(rng, 0.85);
            const cplx want = make_automorphism(alpha)(K.dilatation_jet(z).f0);
            check_close(feps.dilatation_jet(z).f0, want, 1e-12);
        }

        // the harmonic Schwarzian is unchanged
        for (int i = 0; i < 10; ++i) {
            const cplx eps = random_disk_point(rng, 0.85);
            const HarmonicMap feps = affine_change(K, eps);
            const cplx z = random_disk_point(rng, 0.85);
            const cplx s0 = schwarzian(K, z).value;
            check_close(schwarzian(feps, z).value, s0, 1e-9 * (1.0 + std::abs(s0)));
        }
    }

    TEST_CASE("recentering the dilatation after a Koebe transform") {
        std::mt19937 rng(hsd::testing::kSeed + 26);
        const HarmonicMap K = make_harmonic_koebe();
        for (int i = 0; i < 20; ++i) {
            const HarmonicMap k = koebe_transform(K, random_disk_point(rng, 0.8));
            const HarmonicMap centered = affine_change(k, k.dilatation_at_origin());
            CHECK(std::abs(centered.dilatation_at_origin()) < 1e-12);
            // g''(0) = omega'(0) in the recentered map
            check_close(centered.co_analytic_derivative_jet(0.0).f1,
                        centered.dilatation_jet(0.0).f1, 1e-10);
        }
    }

    TEST_CASE("affine span guards") {
        const AnalyticMap T = AnalyticMap::mobius(1.0, 0.0, 0.3, 1.0);
        CHECK_THROWS_AS(affine_span(cplx{0.5}, cplx{0.5}, T, make_mobius_prime(1.0, 0.0, 0.3, 1.0)),
                        InvalidParameter);
    }
}
