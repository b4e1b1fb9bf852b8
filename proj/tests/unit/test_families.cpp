#include <cmath>
#include <random>

#include "doctest.h"
#include "hsd/catalog.hpp"
#include "hsd/families.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"
#include "test_helpers.hpp"

using namespace hsd;
using hsd::testing::check_close;

TEST_SUITE("families") {
    TEST_CASE("analytic order formula") {
        CHECK(analytic_order(6.0) == 2.0);
        CHECK(analytic_order(0.0) == 1.0);
        check_close(analytic_order(9.5), std::sqrt(23.0 / 4.0), 1e-15);
        CHECK_THROWS_AS(analytic_order(-0.5), InvalidParameter);
    }

    TEST_CASE("harmonic order formula") {
        const auto big = harmonic_order(9.5);
        CHECK(big.order == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(big.half_order == doctest::Approx(2.5).epsilon(1e-14));
        CHECK(big.R_sup == 1.0);
        CHECK(big.source == OrderSource::saturated_dilatation);

        const auto edge = harmonic_order(1.5);
        CHECK(edge.order == doctest::Approx(2.0).epsilon(1e-14));

        const auto zero = harmonic_order(0.0);
        CHECK(zero.order == doctest::Approx(1.0));
        CHECK(zero.R_sup == 0.0);

        const auto mid = harmonic_order(1.0, 0.9);
        CHECK(mid.source == OrderSource::explicit_dilatation_sup);
        check_close(mid.order, std::sqrt(1.905) + 0.45, 1e-14);

        CHECK_THROWS_AS(harmonic_order(1.0), InvalidParameter);           // R required
        CHECK_THROWS_AS(harmonic_order(9.5, 0.9), ConsistencyError);      // forced to 1
        CHECK_THROWS_AS(harmonic_order(0.0, 0.5), InvalidParameter);      // forced to 0
        CHECK_THROWS_AS(harmonic_order(1.0, 1.2), InvalidParameter);
    }

    TEST_CASE("recovering the dilatation sup from the order") {
        check_close(dilatation_sup_from_order(9.5, 3.0), 1.0, 1e-12);
        check_close(dilatation_sup_from_order(1.5, 2.0), 1.0, 1e-12);
        CHECK_THROWS_AS(dilatation_sup_from_order(9.5, 1.0), InvalidParameter);

        // round trip against the forward formula
        std::mt19937 rng(hsd::testing::kSeed + 60);
        std::uniform_real_distribution<double> ul(0.05, 1.45), ur(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const double lambda = ul(rng);
            const double R = ur(rng);
            const auto est = harmonic_order(lambda, R);
            check_close(dilatation_sup_from_order(lambda, est.order), R, 1e-9);
        }
    }

    TEST_CASE("dilatation sup lower bound") {
        CHECK_THROWS_AS(dilatation_sup_lower_bound(0.0), InvalidParameter);
        CHECK_THROWS_AS(dilatation_sup_lower_bound(1.5), InvalidParameter);
        check_close(dilatation_sup_lower_bound(2.0 / 3.0), 2.0 / 3.0, 1e-14);
        check_close(dilatation_sup_lower_bound(1.5 - 1e-12), 1.0, 1e-6);
    }

    TEST_CASE("bound consistency with the shear family") {
        // with (3/2) r^2 = lambda the dilatation saturates the bound while
        // the Schwarzian norm stays strictly below lambda
        const double r = 0.8;
        const double lambda = 1.5 * r * r;
        check_close(dilatation_sup_lower_bound(lambda), r, 1e-12);
        const auto omega_norm = sup_norm(hyperbolic_field(make_f_r(r).dilatation()),
                                         GridConfig{.n_radii = 64, .n_angles = 128});
        check_close(omega_norm.value, r, 1e-7);
        const auto s_norm = sup_norm(schwarzian_field(make_f_r(r)),
                                     GridConfig{.n_radii = 64, .n_angles = 128});
        CHECK(s_norm.value < lambda);
    }

    TEST_CASE("Marty residual basics") {
        CHECK(marty_residual({0.0, 0.0, 0.0}) == 1.0);  // the identity map
        // phi_a has a2 = a, a3 = (2a^2+1)/3, b2 = 0
        for (const double a : {1.5, 2.0, 3.0}) {
            const Series s = make_phi_a(a).series(4);
            check_close(s[2], a, 1e-12);
            check_close(s[3], (2.0 * a * a + 1.0) / 3.0, 1e-12);
            CHECK(marty_residual({s[2], s[3], 0.0}) <= 1e-8);
        }
    }

    TEST_CASE("extremal coefficients satisfy the Marty relation") {
        for (const double lambda : {1.5, 6.0, 9.5}) {
            const FamilyParams p(lambda, 1.0);
            const auto c = extremal_coefficients(p);
            check_close(c.a2, p.a + 0.5, 1e-12);
            check_close(c.b2, 0.5, 0.0);
            CHECK(marty_residual(c) <= 1e-8);
        }
        // the relation is algebraic in (a, R); an off-axis pairing satisfies it too
        CHECK(marty_residual(extremal_coefficients(FamilyParams(1.0, 0.9))) <= 1e-8);
        CHECK_THROWS_AS(extremal_coefficients(FamilyParams(0.0, 0.5)), InvalidParameter);
    }

    TEST_CASE("coefficients at (19/2, 1) are the harmonic Koebe triple") {
        const auto c = extremal_coefficients(FamilyParams(9.5, 1.0));
        check_close(c.a2, 2.5, 1e-13);
        check_close(c.a3, 14.0 / 3.0, 1e-12);
        check_close(c.b2, 0.5, 0.0);
    }

    TEST_CASE("order gap between harmonic and analytic families") {
        for (double lambda = 1.5; lambda <= 100.0; lambda *= 1.7) {
            const double gap = harmonic_order(lambda).order - analytic_order(lambda);
            CHECK(gap > 0.0);
            CHECK(gap <= 1.0);
        }
    }

    TEST_CASE("order grows with the dilatation sup") {
        const double lambda = 1.2;
        double prev = harmonic_order(lambda, 0.0).order;
        for (int i = 1; i <= 10; ++i) {
            const double cur = harmonic_order(lambda, i / 10.0).order;
            CHECK(cur > prev);
            prev = cur;
        }
    }

    TEST_CASE("orbit supremum of the second coefficient meets the analytic order") {
        const double lambda = 6.0;
        const double a = std::sqrt(1.0 + lambda / 2.0);
        const HarmonicMap phi = as_harmonic(make_phi_a(a), make_phi_a_prime(a), true);
        double sup = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const HarmonicMap moved = koebe_transform(phi, -0.99 + 1.98 * i / 40.0);
            sup = std::max(sup, 0.5 * std::abs(moved.analytic_derivative_jet(0.0).f1));
        }
        check_close(sup, analytic_order(lambda), 1e-4);
    }
}
