#include <benchmark/benchmark.h>

#include "gammalase/bessel.hpp"
#include "gammalase/constants.hpp"
#include "gammalase/emission.hpp"
#include "gammalase/kinematics.hpp"
#include "gammalase/tube.hpp"

using namespace gammalase;

namespace {

LaserField laser() { return make_laser(785e-9, 1e19); }
ElectronBeam beam() { return make_beam(307.0, Direction::head_on, Spin::up, 1e18); }

void BM_BesselJn(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_jn(order, x));
        x = x < 50.0 ? x * 1.01 : 0.1;
    }
}
BENCHMARK(BM_BesselJn)->Arg(0)->Arg(3)->Arg(12);

void BM_ClosedFormEnergy(benchmark::State& state)
{
    const LaserField l = laser();
    const ElectronBeam b = beam();
    for (auto _ : state) {
        benchmark::DoNotOptimize(emitted_photon_energy(2.9, 1, b, l));
    }
}
BENCHMARK(BM_ClosedFormEnergy);

void BM_RootSolveEnergy(benchmark::State& state)
{
    const LaserField l = laser();
    const ElectronBeam b = beam();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_final_state(2.9, 1, b, l));
    }
}
BENCHMARK(BM_RootSolveEnergy);

void BM_AveragedCrossSection(benchmark::State& state)
{
    const LaserField l = laser();
    const ElectronBeam b = beam();
    for (auto _ : state) {
        benchmark::DoNotOptimize(averaged_cross_section(0.97 * pi, b, l, 0));
    }
}
BENCHMARK(BM_AveragedCrossSection);

void BM_AngularSpectrum(benchmark::State& state)
{
    const LaserField l = laser();
    const ElectronBeam b = beam();
    const auto grid = uniform_theta_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(angular_spectrum(b, l, grid, 0, {}, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AngularSpectrum)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TubeSeeded(benchmark::State& state)
{
    TubeConfig c;
    c.gain = 1.0;
    c.n0 = 1.0;
    c.N0 = 0.5;
    c.length_m = 10.0 * codata2018.compton_wavelength_m;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_seeded(c));
    }
}
BENCHMARK(BM_TubeSeeded);

void BM_TubeRungeKutta(benchmark::State& state)
{
    TubeConfig c;
    c.gain = 1.0;
    c.n0 = 1.0;
    c.N0 = 0.5;
    c.length_m = 10.0 * codata2018.compton_wavelength_m;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_numeric(c));
    }
}
BENCHMARK(BM_TubeRungeKutta);

}  // namespace

BENCHMARK_MAIN();
