#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hsd/catalog.hpp"
#include "hsd/curves.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"
#include "test_helpers.hpp"

using namespace hsd;
using hsd::testing::check_close;
using hsd::testing::random_disk_point;

TEST_SUITE("curves") {
    TEST_CASE("curve points satisfy their defining identities") {
        const FamilyParams p(1.0, 0.9);
        for (const double gamma : {0.0, 0.4, 1.1}) {
            for (const double t : {0.25, 1.0, 3.0, 9.0}) {
                const CurvePoint c = curve_point(p, gamma, t);
                CHECK(std::abs(c.z) < 1.0);
                const cplx w_coord = (1.0 + c.z) / (1.0 - c.z);
                check_close(w_coord, std::polar(t, gamma), 1e-12 * std::max(1.0, t));
                check_close(c.beta, cplx{1.0, std::tan(p.R * gamma)}, 1e-12);
                check_close(c.w / c.w.real(), c.beta, 1e-12);
            }
        }
        // t = 1 pins the half-plane coordinate to the unit circle
        const CurvePoint c = curve_point(p, 0.7, 1.0);
        check_close((1.0 + c.z) / (1.0 - c.z), std::polar(1.0, 0.7), 1e-14);
    }

    TEST_CASE("guards") {
        const FamilyParams p(1.0, 0.9);
        CHECK_THROWS_AS(curve_point(p, -0.1, 1.0), InvalidParameter);
        CHECK_THROWS_AS(curve_point(p, std::numbers::pi / 2.0, 1.0), InvalidParameter);
        CHECK_THROWS_AS(curve_point(p, 0.5, 0.0), InvalidParameter);
        // R * gamma too close to pi/2 degenerates beta
        const FamilyParams q(9.5, 1.0);
        CHECK_THROWS_AS(curve_point(q, std::numbers::pi / 2.0 - 1e-9, 1.0), InvalidParameter);
    }

    TEST_CASE("scaled values are constant along each curve") {
        const FamilyParams p(1.0, 0.9);
        const double ts[] = {0.3, 1.0, 3.0, 9.0};
        SUBCASE("the real diameter carries the value lambda") {
            for (const auto& s : curve_samples(p, 0.0, ts)) {
                CHECK(std::abs(s.point.z.imag()) < 1e-15);
                CHECK(s.scaled == doctest::Approx(p.lambda).epsilon(1e-10));
            }
        }
        SUBCASE("a generic curve") {
            const auto samples = curve_samples(p, 0.7, ts);
            for (const auto& s : samples)
                CHECK(s.scaled ==
                      doctest::Approx(samples.front().scaled).epsilon(1e-8));
        }
    }

    TEST_CASE("closed form agrees with the jet pipeline") {
        std::mt19937 rng(hsd::testing::kSeed + 50);
        for (const FamilyParams p : {FamilyParams(1.0, 0.9), FamilyParams(6.0, 1.0)}) {
            const HarmonicMap f0 = make_extremal(p);
            for (int i = 0; i < 100; ++i) {
                const cplx z = random_disk_point(rng, 0.97);
                const double direct = schwarzian_scaled(f0, z);
                const double closed = closed_form_scaled(p, z);
                CHECK(std::abs(direct - closed) <= 1e-9 * (1.0 + direct));
            }
        }
    }

    TEST_CASE("closed form on the real axis and at the origin gives lambda") {
        const FamilyParams p(1.0, 0.9);
        check_close(closed_form_scaled(p, 0.0), p.lambda, 1e-12);
        for (const double r : {-0.7, -0.2, 0.4, 0.9})
            check_close(closed_form_scaled(p, cplx{r}), p.lambda, 1e-11);
        CHECK_THROWS_AS(closed_form_scaled(p, cplx{1.2, 0.0}), OutOfDomain);
    }

    TEST_CASE("conjugation symmetry of the scaled field") {
        std::mt19937 rng(hsd::testing::kSeed + 51);
        const FamilyParams p(1.0, 0.9);
        const HarmonicMap f0 = make_extremal(p);
        for (int i = 0; i < 40; ++i) {
            const cplx z = random_disk_point(rng, 0.9);
            const double a = schwarzian_scaled(f0, z);
            const double b = schwarzian_scaled(f0, std::conj(z));
            CHECK(std::abs(a - b) <= 1e-10 * (1.0 + a));
        }
    }

    TEST_CASE("family coefficients") {
        for (const FamilyParams p : {FamilyParams(1.0, 0.9), FamilyParams(9.5, 1.0)}) {
            const auto c = FamilyCoefficients::from(p);
            // two routes to the squared-modulus coefficients
            check_close(c.At, c.A * c.A + 2.0 * c.A * c.B + 4.0 * c.A * c.C, 1e-10);
            check_close(c.Bt, c.B * c.B + 2.0 * c.B * c.C - 2.0 * c.A * c.C, 1e-10);
            check_close(c.Ct, c.C * c.C, 1e-12);
            check_close(c.At + c.Bt + c.Ct, p.lambda * p.lambda,
                        1e-9 * std::max(1.0, p.lambda * p.lambda));
            CHECK(c.K > 0.0);
            check_close(c.K, c.Bt + 2.0 * c.Ct, 1e-9 * std::max(1.0, std::abs(c.K)));
        }
    }

    TEST_CASE("radial profile forms") {
        SUBCASE("value at zero is lambda squared") {
            const FamilyParams p(1.0, 0.9);
            const auto f = psi_profile(p, 0.0);
            check_close(f.trig_form, 1.0, 1e-12);
            check_close(f.phi_form, 1.0, 1e-12);
        }
        SUBCASE("lambda = 3/2 gives the constant profile 9/4") {
            const FamilyParams p(1.5, 1.0);
            CHECK(p.a == doctest::Approx(1.0));
            for (const double r : {0.0, 0.2, 0.5, 0.8, 0.95})
                check_close(psi_profile(p, r).trig_form, 2.25, 1e-10);
        }
        SUBCASE("the two forms agree") {
            for (const FamilyParams p : {FamilyParams(1.0, 0.9), FamilyParams(6.0, 1.0)}) {
                for (int i = 1; i <= 9; ++i) {
                    const auto f = psi_profile(p, 0.1 * i);
                    CHECK(std::abs(f.phi_form * f.phi_form - f.trig_form) <=
                          1e-9 * (1.0 + f.trig_form));
                }
            }
        }
        SUBCASE("profile matches the scaled field on the imaginary axis") {
            const FamilyParams p(6.0, 1.0);
            const HarmonicMap f0 = make_extremal(p);
            for (const double r : {0.1, 0.45, 0.8}) {
                const double direct = schwarzian_scaled(f0, cplx{0.0, r});
                check_close(psi_profile(p, r).phi_form, direct, 1e-10 * (1.0 + direct));
            }
        }
    }

    TEST_CASE("monotone radial check") {
        for (const auto& [lambda, R] : {std::pair{9.5, 1.0}, {1.5, 1.0}, {1.0, 0.9}}) {
            const auto rep = psi_monotone_check(FamilyParams(lambda, R), 2000);
            CHECK(rep.in_verified_regime);
            CHECK(rep.pass);
            CHECK(rep.max_violation <= 1e-9);
        }
        // an inadmissible pairing: R far above the allowed dilatation bound
        const auto bad = psi_monotone_check(FamilyParams(0.1, 0.99), 2000);
        CHECK_FALSE(bad.pass);
        CHECK(bad.max_violation > 1.0);
    }

    TEST_CASE("norm reduces to the imaginary-axis supremum") {
        const FamilyParams p(1.0, 0.9);
        const auto est = sup_norm(schwarzian_field(make_extremal(p)),
                                  GridConfig{.n_radii = 128, .n_angles = 256});
        double axis_sup = 0.0;
        for (int i = 0; i < 4000; ++i)
            axis_sup = std::max(axis_sup, psi_profile(p, i / 4000.0).phi_form);
        CHECK(std::abs(est.value - axis_sup) <= 1e-5 * std::max(1.0, axis_sup));
    }
}
