#include <benchmark/benchmark.h>

#include <vector>

#include "anyonlab/lanczos.hpp"
#include "anyonlab/pair.hpp"
#include "anyonlab/sparse.hpp"
#include "anyonlab/tonks_girardeau.hpp"
#include "anyonlab/vmc.hpp"

using namespace anyonlab;

static void BM_PairMatvec(benchmark::State& state) {
    const auto p = pair::PairProblem::standard(0.5, 0.25, static_cast<int>(state.range(0)));
    const auto h = pair::build_relative_hamiltonian(p);
    const auto v = spectra::random_unit_vector(h.dimension(), 1);
    spectra::ComplexVector out(h.dimension());
    for (auto _ : state) {
        h.apply(v.data(), out.data());
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(h.nonzeros()));
}
BENCHMARK(BM_PairMatvec)->Arg(80)->Arg(160)->Arg(320);

static void BM_PairSolve(benchmark::State& state) {
    const auto p = pair::PairProblem::standard(1.0, 0.5, static_cast<int>(state.range(0)));
    pair::SolveSettings s;
    s.shift_invert = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(pair::pair_eigenstates(p, s));
}
BENCHMARK(BM_PairSolve)->Args({40, 0})->Args({40, 1})->Args({80, 1})->Unit(benchmark::kMillisecond);

static void BM_TgEvaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const tonks::TgEigenstate psi(tonks::OccupationSet::ground(n));
    std::vector<double> x(n), g(n);
    for (int i = 0; i < n; ++i) x[i] = -1.0 + 0.37 * i;
    for (auto _ : state) benchmark::DoNotOptimize(psi.value_and_gradient(x, g));
}
BENCHMARK(BM_TgEvaluate)->Arg(2)->Arg(3)->Arg(6);

static void BM_LocalEnergy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const vmc::AnsatzState s{tonks::OccupationSet::ground(n), 0.5, 0.25};
    std::vector<double> pos(2 * n);
    for (int i = 0; i < n; ++i) {
        pos[2 * i] = -1.0 + 0.41 * i;
        pos[2 * i + 1] = 0.1 * (i % 2 ? 1 : -1);
    }
    for (auto _ : state) benchmark::DoNotOptimize(vmc::local_energy(s, pos).total());
}
BENCHMARK(BM_LocalEnergy)->Arg(2)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
