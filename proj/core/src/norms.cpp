#include "hsd/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>

#include "hsd/errors.hpp"
#include "hsd/format.hpp"
#include "hsd/schwarzian.hpp"

namespace hsd {

namespace {

// Plateau ties and boundary-ladder growth are judged against these relative
// thresholds; they sit well above the ~1e-9 rounding noise of the scaled
// field near the boundary and well below every tolerance the estimator is
// asked to meet.
constexpr double kTieRel = 1e-9;
constexpr double kGrowthRel = 1e-7;
constexpr double kRadiusClamp = 1e-9;  // evaluation stays inside |z| <= 1 - 1e-9

double tie_tol(double v) { return kTieRel * std::abs(v); }

bool prefer_position(cplx a, cplx b) {
    // Smallest modulus first, then smallest principal argument.
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
}

std::optional<double> try_field(const ScalarField& field, cplx z) {
    try {
        return field(z);
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct Sample {
    double value;
    cplx z;
};

// Derivative-free compass search from p0, clamped to the open disk.
Sample refine_local(const ScalarField& field, cplx p0, double v0, double step0, double tol) {
    Sample best{v0, p0};
    double step = std::max(step0, tol);
    const cplx dirs[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    int moves_at_level = 0;
    int evals = 0;
    while (step > tol && evals < 20000) {
        Sample candidate = best;
        for (const cplx& d : dirs) {
            cplx q = best.z + step * d;
            if (std::abs(q) > 1.0 - kRadiusClamp) continue;
            ++evals;
            if (auto v = try_field(field, q); v && *v > candidate.value)
                candidate = {*v, q};
        }
        if (candidate.value > best.value) {
            best = candidate;
            if (++moves_at_level > 64) {
                step *= 0.5;
                moves_at_level = 0;
            }
        } else {
            step *= 0.5;
            moves_at_level = 0;
        }
    }
    return best;
}

}  // namespace

std::vector<double> grid_radii(int n) {
    if (n <= 0) throw InvalidParameter("grid needs a positive radius count");
    std::vector<double> r(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        r[static_cast<size_t>(j)] = 1.0 - std::exp2(-8.0 * j / n);
    return r;
}

std::vector<double> grid_angles(int n) {
    if (n <= 0) throw InvalidParameter("grid needs a positive angle count");
    std::vector<double> t(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<size_t>(i)] = 2.0 * std::numbers::pi * i / n;
    return t;
}

ScalarField schwarzian_field(HarmonicMap f) {
    return [f = std::move(f)](cplx z) { return schwarzian_scaled(f, z); };
}

ScalarField hyperbolic_field(AnalyticMap omega) {
    return [omega = std::move(omega)](cplx z) { return std::abs(hyperbolic_derivative(omega, z)); };
}

NormEstimate sup_norm(const ScalarField& field, const GridConfig& cfg) {
    if (cfg.n_radii <= 0 || cfg.n_angles <= 0)
        throw InvalidParameter("sup_norm grid sizes must be positive");
    if (!(cfg.refine_tol > 0.0 && cfg.refine_tol <= 1e-4))
        throw InvalidParameter("sup_norm refine tolerance must lie in (0, 1e-4]");

    const std::vector<double> radii = grid_radii(cfg.n_radii);
    const std::vector<double> angles = grid_angles(cfg.n_angles);

    // Stage 1: full grid scan. Field errors on the interior grid propagate.
    std::vector<std::vector<double>> values(radii.size(),
                                            std::vector<double>(angles.size()));
    double grid_max = -1.0;
    for (size_t j = 0; j < radii.size(); ++j) {
        for (size_t i = 0; i < angles.size(); ++i) {
            const cplx z = std::polar(radii[j], angles[i]);
            const double v = field(z);
            values[j][i] = v;
            grid_max = std::max(grid_max, v);
        }
    }

    // Deterministic argmax: among samples tied with the maximum, prefer the
    // smallest modulus, then the smallest principal argument.
    cplx grid_arg{};
    bool have_arg = false;
    for (size_t j = 0; j < radii.size(); ++j) {
        for (size_t i = 0; i < angles.size(); ++i) {
            if (values[j][i] < grid_max - tie_tol(grid_max)) continue;
            const cplx z = std::polar(radii[j], angles[i]);
            if (!have_arg || prefer_position(z, grid_arg)) {
                grid_arg = z;
                have_arg = true;
            }
        }
    }

    // Stage 2: refine the best cells (up to 8 pairwise non-adjacent seeds).
    struct Seed {
        double v;
        size_t j, i;
    };
    std::vector<Seed> seeds;
    for (size_t j = 0; j < radii.size(); ++j)
        for (size_t i = 0; i < angles.size(); ++i) seeds.push_back({values[j][i], j, i});
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
        if (a.v != b.v) return a.v > b.v;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    });
    std::vector<Seed> chosen;
    for (const Seed& s : seeds) {
        if (chosen.size() >= 8) break;
        const bool adjacent = std::any_of(chosen.begin(), chosen.end(), [&](const Seed& c) {
            const auto dj = static_cast<long>(s.j) - static_cast<long>(c.j);
            const long di0 = std::labs(static_cast<long>(s.i) - static_cast<long>(c.i));
            const long di = std::min(di0, static_cast<long>(angles.size()) - di0);
            return std::labs(dj) <= 2 && di <= 2;
        });
        if (!adjacent) chosen.push_back(s);
    }

    Sample best{grid_max, grid_arg};
    for (const Seed& s : chosen) {
        const double r = radii[s.j];
        const double dr = s.j + 1 < radii.size() ? radii[s.j + 1] - radii[s.j]
                                                 : 1.0 - radii[s.j];
        const double darc = std::max(r, 0.01) * (angles.size() > 1 ? angles[1] : 1.0);
        const double step0 = 0.5 * std::max(dr, darc);
        const Sample refined = refine_local(field, std::polar(r, angles[s.i]), s.v, step0,
                                            cfg.refine_tol);
        if (refined.value > best.value) best = refined;
    }

    NormEstimate est;
    est.n_radii = cfg.n_radii;
    est.n_angles = cfg.n_angles;
    est.value = best.value;
    // Keep the tie-broken grid argmax unless refinement genuinely improved.
    est.argmax = best.value > grid_max + kGrowthRel * std::abs(grid_max) ? best.z : grid_arg;
    est.attained = true;

    // Stage 3: boundary ladder along the argmax direction. A strictly
    // increasing ladder means the supremum is a radial limit; report the
    // Richardson-extrapolated value instead of any attained sample.
    const double theta = std::arg(est.argmax);
    std::vector<double> ladder;
    bool ladder_ok = true;
    for (int k = cfg.ladder_first; k <= cfg.ladder_last; ++k) {
        const auto v = try_field(field, std::polar(1.0 - std::pow(10.0, -k), theta));
        if (!v) {
            ladder_ok = false;
            break;
        }
        ladder.push_back(*v);
    }
    if (ladder_ok && ladder.size() >= 2) {
        est.value = std::max(est.value, *std::max_element(ladder.begin(), ladder.end()));
        bool increasing = true;
        for (size_t k = 0; k + 1 < ladder.size(); ++k) {
            if (!(ladder[k + 1] - ladder[k] >
                  kGrowthRel * std::max(std::abs(ladder[k]), 1e-300))) {
                increasing = false;
                break;
            }
        }
        if (increasing) {
            const double v_last = ladder.back();
            const double v_prev = ladder[ladder.size() - 2];
            const double extrapolated = v_last + (v_last - v_prev) / 9.0;
            if (extrapolated > est.value) est.value = extrapolated;
            est.attained = false;
            est.argmax = std::polar(1.0 - std::pow(10.0, -cfg.ladder_last), theta);
        }
    }

    est.refinement_error = est.value - grid_max;
    return est;
}

void write_heatmap_csv(std::ostream& out, const ScalarField& field, int n_radii, int n_angles) {
    const std::vector<double> radii = grid_radii(n_radii);
    const std::vector<double> angles = grid_angles(n_angles);
    out << "re,im,scaled\n";
    for (const double r : radii) {
        for (const double t : angles) {
            const cplx z = std::polar(r, t);
            out << format_complex_csv(z) << ',' << format_double(field(z)) << '\n';
        }
    }
}

}  // namespace hsd
