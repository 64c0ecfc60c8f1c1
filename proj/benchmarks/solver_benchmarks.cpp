// SPDX-License-Identifier: MIT
//
// Microbenchmarks for the projection and solver hot paths: 1-D/2-D basis
// projection, closed-form prefix integration, one projected kernel step, and
// a full benchmark-case run.

#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include <benchmark/benchmark.h>

#include "hybridfp/cases.hpp"
#include "hybridfp/integral.hpp"
#include "hybridfp/piecewise.hpp"
#include "hybridfp/projection.hpp"

namespace {

using hybridfp::Bilinear2D;
using hybridfp::PiecewiseLinear1D;

double smooth(double t) { return std::exp(-t) * std::sin(3.0 * t) + t * t; }

void BM_Project1D(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        PiecewiseLinear1D proj = hybridfp::project_1d(smooth, n, 1.0);
        benchmark::DoNotOptimize(proj);
    }
}
BENCHMARK(BM_Project1D)->Arg(9)->Arg(33)->Arg(1025);

void BM_IntegratePrefix(benchmark::State& state) {
    const PiecewiseLinear1D proj =
        hybridfp::project_1d(smooth, static_cast<std::size_t>(state.range(0)), 1.0);
    double t = 0.0;
    for (auto _ : state) {
        t = t >= 1.0 ? 0.0 : t + 0.0009765625;  // sweep the unit interval
        benchmark::DoNotOptimize(proj.integrate_prefix(t));
    }
}
BENCHMARK(BM_IntegratePrefix)->Arg(33)->Arg(1025);

void BM_Project2D(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Bilinear2D proj = hybridfp::project_2d(
            [](double t, double s) { return smooth(t) * smooth(s); }, n, 1.0);
        benchmark::DoNotOptimize(proj);
    }
}
BENCHMARK(BM_Project2D)->Arg(9)->Arg(33);

void BM_KernelStep(benchmark::State& state) {
    const hybridfp::BenchCase bench = hybridfp::load_case("Ex3");
    const auto& p = std::get<hybridfp::HybridIntegralEq>(bench.problem);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        hybridfp::FunctionExpr image = hybridfp::step_T_int(p, n, bench.x0);
        // Force the projection and a few evaluations; the expression is lazy.
        double acc = 0.0;
        for (int j = 0; j <= 8; ++j) acc += image(j / 8.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KernelStep)->Arg(9)->Arg(33);

void BM_RunCase(benchmark::State& state) {
    const hybridfp::BenchCase bench = hybridfp::load_case("Ex1");
    for (auto _ : state) {
        hybridfp::CaseReport report =
            hybridfp::run_case(bench, 4, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_RunCase)->Arg(9)->Arg(33)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
