// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the team size.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "telegraph/problem.hpp"
#include "telegraph/solver.hpp"
#include "telegraph/stability.hpp"

using namespace telegraph;

namespace {

template <bool Parallel>
void BM_AssembleStep(benchmark::State& state) {
    const TelegraphProblem p = builtin_problem(1);
    const UniformMesh mesh(p.a, p.b, static_cast<int>(state.range(0)));
    const SchemeParams params(0.5, 1e-3, 1.0);
    const auto c0 = initial_coefficients(p, mesh).values;
    for (auto _ : state) {
        auto sys = Parallel ? assemble_step(p, mesh, params, c0, c0, 0.1, false)
                            : assemble_step_serial(p, mesh, params, c0, c0, 0.1, false);
        benchmark::DoNotOptimize(sys.rhs.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_StabilityScan(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? stability_scan(2.0, 1.0, 0.5, 0.1, 0.1, samples)
                          : stability_scan_serial(2.0, 1.0, 0.5, 0.1, 0.1, samples);
        benchmark::DoNotOptimize(r.max_amplification);
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

std::vector<StabilityCase> grid() {
    std::vector<StabilityCase> cases;
    for (double theta : {0.5, 0.6, 0.75, 0.9, 1.0})
        for (double alpha : {0.0, 0.5, 2.0, 4.0, 6.0, 10.0})
            for (double beta : {0.0, 1.0, 2.0, 5.0})
                for (double k : {1e-3, 1e-2, 1e-1, 1.0})
                    for (double h : {std::numbers::pi / 10, std::numbers::pi / 40, 0.5})
                        cases.push_back({alpha, beta, theta, k, h});
    return cases;
}

template <bool Parallel>
void BM_StabilitySweep(benchmark::State& state) {
    const auto cases = grid();
    for (auto _ : state) {
        auto r = Parallel ? stability_sweep(cases) : stability_sweep_serial(cases);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(cases.size()));
}

}  // namespace

BENCHMARK(BM_AssembleStep<false>)->Name("assemble_step/serial")->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(BM_AssembleStep<true>)->Name("assemble_step/omp")->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(BM_StabilityScan<false>)->Name("stability_scan/serial")->Arg(721)->Arg(100001);
BENCHMARK(BM_StabilityScan<true>)->Name("stability_scan/omp")->Arg(721)->Arg(100001);
BENCHMARK(BM_StabilitySweep<false>)->Name("stability_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilitySweep<true>)->Name("stability_sweep/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
