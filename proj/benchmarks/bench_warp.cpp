// Microbenchmarks for the hot paths: warping operators, the oscillatory oracle,
// and the locality check. Fock dimension is 2^(2 * range argument).
#include <benchmark/benchmark.h>

#include "warpds/warpds.hpp"

namespace {

using namespace warpds;

OneParticleModel model_with(int pairs_per_type)
{
    ModelSpec s;
    s.d_plus = s.d_minus = 2 * pairs_per_type;
    s.boost_freqs_plus.clear();
    s.boost_freqs_minus.clear();
    s.localized_modes.clear();
    s.reflection_pairs.clear();
    for (int i = 0; i < pairs_per_type; ++i) {
        const double w = 1.0 + 0.25 * i;
        s.boost_freqs_plus.insert(s.boost_freqs_plus.end(), {w, -w});
        s.boost_freqs_minus.insert(s.boost_freqs_minus.end(), {w, -w});
    }
    for (int j = 0; j < 4 * pairs_per_type; j += 2) {
        s.localized_modes.push_back(j);
        s.reflection_pairs.emplace_back(j, j + 1);
    }
    return OneParticleModel(s);
}

void BM_warp_sectors(benchmark::State& state)
{
    const OneParticleModel m = model_with(static_cast<int>(state.range(0)));
    Rng rng = make_stream(1, "bench");
    const FockOperator F = random_operator(m.fock(), rng);
    const DeformationContext ctx(m, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(warp(ctx, F));
    state.counters["fock_dim"] = static_cast<double>(m.fock()->dim());
}
BENCHMARK(BM_warp_sectors)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

void BM_warp_spectral(benchmark::State& state)
{
    const OneParticleModel m = model_with(static_cast<int>(state.range(0)));
    Rng rng = make_stream(1, "bench");
    const FockOperator F = random_operator(m.fock(), rng);
    const DeformationContext ctx(m, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(warp_spectral(ctx, F));
}
BENCHMARK(BM_warp_spectral)->DenseRange(1, 2)->Unit(benchmark::kMicrosecond);

void BM_warp_rotated_flow(benchmark::State& state)
{
    const OneParticleModel m = model_with(1);
    Rng rng = make_stream(1, "bench");
    const FockOperator F = random_operator(m.fock(), rng);
    const DeformationContext ctx(m, rotated_flow(m, 0.4), 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(warp(ctx, F));
}
BENCHMARK(BM_warp_rotated_flow)->Unit(benchmark::kMicrosecond);

void BM_pair_integral(benchmark::State& state)
{
    const Cutoff c = state.range(0) == 0 ? Cutoff::gaussian : Cutoff::compact;
    double a = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(regularized_pair_integral(a, 1.5, 0.025, c));
        a += 1e-9;
    }
    state.SetLabel(state.range(0) == 0 ? "gaussian" : "compact");
}
BENCHMARK(BM_pair_integral)->Arg(0)->Arg(1);

void BM_oracle_default_model(benchmark::State& state)
{
    const OneParticleModel m(default_model_spec());
    Rng rng = make_stream(1, "bench");
    const FockOperator F = random_operator(m.fock(), rng);
    const DeformationContext ctx(m, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(warp_oscillatory(ctx, F, 0.025, Cutoff::compact));
}
BENCHMARK(BM_oracle_default_model)->Unit(benchmark::kMillisecond);

void BM_twisted_locality(benchmark::State& state)
{
    const OneParticleModel m(default_model_spec());
    TwistedLocalityOptions o;
    o.degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_twisted_locality(m, 0.5, o));
}
BENCHMARK(BM_twisted_locality)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_covering_hom(benchmark::State& state)
{
    const SpinElement g = rotor_cover(1, 3, 0.4) * boost_cover(0.3);
    for (auto _ : state) benchmark::DoNotOptimize(covering_hom(g));
}
BENCHMARK(BM_covering_hom);

}  // namespace

BENCHMARK_MAIN();
