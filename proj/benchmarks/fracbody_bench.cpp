#include <benchmark/benchmark.h>

#include "fracbody/box_quad.hpp"
#include "fracbody/proj_body.hpp"
#include "fracbody/star_body.hpp"

#include <memory>

using namespace fracbody;

namespace {

ProjQuad bench_quad(int n, int m) {
    ProjQuad q;
    q.box = BoxQuad::make(n, 8.5, m);
    q.tgrid.points = 100;
    return q;
}

void BM_ShiftEnergy2D(benchmark::State& state) {
    const FieldSpec f = FieldSpec::gaussian(2, 1.0, Vec{0.3, 0.1, 0.0});
    const ShiftEnergyEngine engine(f, BoxQuad::make(2, 8.5, static_cast<int>(state.range(0))), 2.0);
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine.signed_energy(Vec{t, 0.05, 0.0}));
        t += 1e-4;
    }
}
BENCHMARK(BM_ShiftEnergy2D)->Arg(48)->Arg(64)->Arg(96);

void BM_BuildFracBody2D(benchmark::State& state) {
    const FieldSpec f = FieldSpec::gaussian(2, 1.0);
    const FracParams params = validate_params(2, 0.5, 2.0);
    const auto grid = std::make_shared<SphereGrid>(
        sphere_grid(2, static_cast<int>(state.range(0))));
    const ProjQuad q = bench_quad(2, 48);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_frac_body(f, params, grid, BodyVariant::Sym, q));
}
BENCHMARK(BM_BuildFracBody2D)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DualMixedVolume(benchmark::State& state) {
    const auto grid = std::make_shared<SphereGrid>(sphere_grid(3, 12));
    const StarBody a = random_star_body(1, 3, grid);
    const StarBody b = random_star_body(2, 3, grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(dual_mixed_volume(a, b, -0.9));
}
BENCHMARK(BM_DualMixedVolume);

void BM_DoubleEnergyOracle1D(benchmark::State& state) {
    const FieldSpec f = FieldSpec::gaussian(1, 1.0);
    const FracParams params = validate_params(1, 0.25, 2.0);
    const auto grid = std::make_shared<SphereGrid>(sphere_grid(1, 1));
    const StarBody unit = ball_body(grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(direct_double_energy(
            f, unit, params, static_cast<int>(state.range(0)), 8.5));
}
BENCHMARK(BM_DoubleEnergyOracle1D)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
