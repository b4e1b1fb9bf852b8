#include <benchmark/benchmark.h>

#include "hsd/catalog.hpp"
#include "hsd/norms.hpp"
#include "hsd/schwarzian.hpp"

namespace {

using hsd::cplx;

void BM_JetMultiply(benchmark::State& state) {
    hsd::Jet3 x{cplx{0.3, 0.1}, cplx{1.0, -0.2}, cplx{0.5, 0.5}, cplx{-0.1, 0.7}};
    hsd::Jet3 y{cplx{0.7, -0.4}, cplx{0.2, 0.9}, cplx{-0.3, 0.1}, cplx{0.6, 0.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_JetMultiply);

void BM_GeneralizedKoebeJet(benchmark::State& state) {
    const hsd::AnalyticMap phi = hsd::make_phi_a(2.3);
    const cplx z{0.4, 0.25};
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi.jet(z));
    }
}
BENCHMARK(BM_GeneralizedKoebeJet);

void BM_HarmonicSchwarzian(benchmark::State& state) {
    const hsd::HarmonicMap f0 = hsd::make_extremal(hsd::FamilyParams(1.0, 0.9));
    const cplx z{0.35, -0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsd::schwarzian_scaled(f0, z));
    }
}
BENCHMARK(BM_HarmonicSchwarzian);

void BM_SupNormKoebe(benchmark::State& state) {
    const auto field = hsd::schwarzian_field(
        hsd::as_harmonic(hsd::make_analytic_koebe(), hsd::make_analytic_koebe_prime(), true));
    hsd::GridConfig cfg;
    cfg.n_radii = static_cast<int>(state.range(0));
    cfg.n_angles = 2 * cfg.n_radii;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsd::sup_norm(field, cfg));
    }
}
BENCHMARK(BM_SupNormKoebe)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
