// Serial reference vs OpenMP kernels for trajectory sampling, large
// truncated-Fock evolution, and parameter scans.

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccdyn/config.hpp"
#include "ccdyn/oracle.hpp"
#include "ccdyn/scan.hpp"
#include "ccdyn/series.hpp"

namespace {

using namespace ccdyn;

const SystemParams kParams{1.0, 10.0, 0.1, 1000.0};

void BM_SampleSeries(benchmark::State& state, BackendKind kind, Execution exec) {
    const AmplitudeFn fn = make_backend(kind, kParams, {0.0, 0.0, 1.0, 0.0});
    const TimeGrid grid{40.0, int(state.range(0))};
    for (auto _ : state) {
        TimeSeries s = sample_series(fn, grid, exec);
        benchmark::DoNotOptimize(s.rows.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.samples);
}

// Dense evolution in a 4(n_max+1)^2-dimensional truncated Fock space,
// sampled over a grid serially or with OpenMP.
void BM_FockEvolve(benchmark::State& state, Execution exec) {
    const int n_max = int(state.range(0));
    const int samples = 512;
    const auto h = fock_hamiltonian(kParams, n_max);
    const EigenPropagator prop(h);
    Eigen::VectorXcd init = Eigen::VectorXcd::Zero(h.dimension());
    init[2] = 1.0;

    std::vector<double> norms(samples);
    for (auto _ : state) {
        if (exec == Execution::Serial) {
            for (int k = 0; k < samples; ++k) {
                norms[k] = prop.evolve(init, 0.1 * k).squaredNorm();
            }
        } else {
#pragma omp parallel for schedule(static)
            for (int k = 0; k < samples; ++k) {
                norms[k] = prop.evolve(init, 0.1 * k).squaredNorm();
            }
        }
        benchmark::DoNotOptimize(norms.data());
    }
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_Scan(benchmark::State& state, Execution exec) {
    ScanRequest req;
    req.base = {1.0, 0.0, 0.1, 1000.0};
    req.parameter = ScanParameter::Hopping;
    req.from = 2.0;
    req.to = 20.0;
    req.points = int(state.range(0));
    req.observable = ScanObservable::FirstTransferTime;
    req.horizon = 45.0;
    req.samples = 4001;
    for (auto _ : state) {
        auto rows = run_scan(req, exec);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * req.points);
}

}  // namespace

BENCHMARK_CAPTURE(BM_SampleSeries, oracle_serial, BackendKind::Oracle,
                  Execution::Serial)
    ->Arg(20000);
BENCHMARK_CAPTURE(BM_SampleSeries, oracle_parallel, BackendKind::Oracle,
                  Execution::Parallel)
    ->Arg(20000);
BENCHMARK_CAPTURE(BM_SampleSeries, exact_serial, BackendKind::Exact,
                  Execution::Serial)
    ->Arg(20000);
BENCHMARK_CAPTURE(BM_SampleSeries, exact_parallel, BackendKind::Exact,
                  Execution::Parallel)
    ->Arg(20000);

BENCHMARK_CAPTURE(BM_FockEvolve, serial, Execution::Serial)->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(BM_FockEvolve, parallel, Execution::Parallel)->Arg(3)->Arg(5);

BENCHMARK_CAPTURE(BM_Scan, serial, Execution::Serial)->Arg(8);
BENCHMARK_CAPTURE(BM_Scan, parallel, Execution::Parallel)->Arg(8);

BENCHMARK_MAIN();
