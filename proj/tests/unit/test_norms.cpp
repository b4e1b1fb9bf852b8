#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hsd/catalog.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"
#include "test_helpers.hpp"

using namespace hsd;
using hsd::testing::random_disk_point;

TEST_SUITE("norms") {
    TEST_CASE("radial grid clusters toward the boundary") {
        const auto r = grid_radii(256);
        CHECK(r.front() == 0.0);
        CHECK(r.back() > 0.99);
        CHECK(r.back() < 1.0);
        for (size_t i = 1; i < r.size(); ++i) CHECK(r[i] > r[i - 1]);
        CHECK_THROWS_AS(grid_radii(0), InvalidParameter);
    }

    TEST_CASE("analytic Koebe norm is 6, attained on the plateau") {
        const auto est = sup_norm(schwarzian_field(
            as_harmonic(make_analytic_koebe(), make_analytic_koebe_prime(), true)));
        CHECK(std::abs(est.value - 6.0) <= 1e-6);
        CHECK(est.attained);
        CHECK(std::abs(est.argmax) <= 1e-6);
        CHECK(est.n_radii == 256);
        CHECK(est.n_angles == 512);
    }

    TEST_CASE("strip map norm is 2") {
        const auto est =
            sup_norm(schwarzian_field(as_harmonic(make_strip(), make_strip_prime(), true)));
        CHECK(std::abs(est.value - 2.0) <= 1e-6);
        CHECK(est.attained);
    }

    TEST_CASE("half-shear norm 3/2 is a boundary limit") {
        const auto est = sup_norm(schwarzian_field(make_f_r(1.0)));
        CHECK(std::abs(est.value - 1.5) <= 1e-6);
        CHECK_FALSE(est.attained);
        CHECK(std::abs(est.argmax) > 0.999);
    }

    TEST_CASE("harmonic Koebe norm is 19/2") {
        const auto est = sup_norm(schwarzian_field(make_harmonic_koebe()));
        CHECK(std::abs(est.value - 9.5) <= 1e-5);
        CHECK(est.attained);
        CHECK(std::abs(est.argmax) <= 1e-3);
    }

    TEST_CASE("extremal norms equal lambda with the plateau at the origin") {
        for (const auto& [lambda, R] : {std::pair{1.5, 1.0}, {1.0, 0.9}}) {
            const auto est =
                sup_norm(schwarzian_field(make_extremal(FamilyParams(lambda, R))));
            CHECK(std::abs(est.value - lambda) <= 1e-5);
            CHECK(est.attained);
            CHECK(std::abs(est.argmax) <= 1e-3);
        }
    }

    TEST_CASE("estimate dominates random interior samples") {
        std::mt19937 rng(hsd::testing::kSeed + 40);
        const HarmonicMap K = make_harmonic_koebe();
        const auto field = schwarzian_field(K);
        const auto est = sup_norm(field);
        for (int i = 0; i < 1000; ++i) {
            const double v = field(random_disk_point(rng, 0.999));
            CHECK(est.value >= v - 1e-12 * std::max(1.0, est.value));
        }
    }

    TEST_CASE("shear norms for r < 1 stay strictly below (3/2) r^2") {
        for (const double r : {0.4, 0.8}) {
            const auto est = sup_norm(schwarzian_field(make_f_r(r)));
            CHECK(est.value < 1.5 * r * r);
        }
    }

    TEST_CASE("dilatation hyperbolic norms") {
        // identity dilatation of f_r has hyperbolic norm r, attained at 0
        for (const double r : {0.5, 0.9}) {
            const auto est = sup_norm(hyperbolic_field(make_f_r(r).dilatation()),
                                      GridConfig{.n_radii = 64, .n_angles = 128});
            CHECK(std::abs(est.value - r) <= 1e-7);
            CHECK(est.attained);
        }
        // automorphisms sit on the constant plateau 1
        const auto est = sup_norm(hyperbolic_field(make_automorphism(cplx{0.4, 0.1})),
                                  GridConfig{.n_radii = 64, .n_angles = 128});
        CHECK(std::abs(est.value - 1.0) <= 1e-9);
    }

    TEST_CASE("config validation") {
        const auto field = hyperbolic_field(make_lens(0.5));
        CHECK_THROWS_AS(sup_norm(field, GridConfig{.n_radii = 0}), InvalidParameter);
        CHECK_THROWS_AS(sup_norm(field, GridConfig{.refine_tol = 1.0}), InvalidParameter);
    }

    TEST_CASE("heatmap export is deterministic and well-formed") {
        const auto field = schwarzian_field(
            as_harmonic(make_analytic_koebe(), make_analytic_koebe_prime(), true));
        std::ostringstream a, b;
        write_heatmap_csv(a, field, 4, 8);
        write_heatmap_csv(b, field, 4, 8);
        CHECK(a.str() == b.str());

        std::istringstream in(a.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "re,im,scaled");
        int rows = 0;
        double first_scaled = -1.0;
        while (std::getline(in, line)) {
            if (rows == 0) {
                const auto c1 = line.find(','), c2 = line.rfind(',');
                CHECK(line.substr(0, c1) == "0");
                first_scaled = std::stod(line.substr(c2 + 1));
            }
            ++rows;
        }
        CHECK(rows == 4 * 8);
        CHECK(first_scaled == doctest::Approx(6.0));  // |S_k(0)| with unit weight
    }
}
