// Serial reference kernels against their OpenMP counterparts.

#include "aaslab/build.hpp"
#include "aaslab/genvec.hpp"
#include "aaslab/kernels.hpp"
#include "aaslab/structure.hpp"

#include <benchmark/benchmark.h>

using namespace aaslab;

namespace {

const Group& group_for(int which)
{
    static const Group groups[] = {
        build_group(GroupSpec::alternating(5)),
        build_group(GroupSpec::psl2(7)),
        build_group(GroupSpec::alternating(6)),
        build_group(GroupSpec::sl2(8)),
    };
    return groups[which];
}

void set_label(benchmark::State& state, const Group& g)
{
    state.SetLabel(g.label() + " |G|=" + std::to_string(g.order()));
}

template <bool Parallel>
void commutators(benchmark::State& state)
{
    const Group& g = group_for(int(state.range(0)));
    for (auto _ : state) {
        auto k = Parallel ? kernels::commutator_counts(g) : kernels::commutator_counts_serial(g);
        benchmark::DoNotOptimize(k.data());
    }
    set_label(state, g);
}

template <bool Parallel>
void convolution(benchmark::State& state)
{
    const Group& g = group_for(int(state.range(0)));
    const auto whole = whole_group(g);
    const auto k = kernels::commutator_counts(g);
    std::vector<BigInt> f(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
        f[x] = BigInt(k[x]) * BigInt(k[(x * 7) % g.order()]);
    std::vector<BigInt> out(g.order());
    for (auto _ : state) {
        if (Parallel)
            kernels::convolve(g, whole.elements, f, k, out);
        else
            kernels::convolve_serial(g, whole.elements, f, k, out);
        benchmark::DoNotOptimize(out.data());
    }
    set_label(state, g);
}

void count_generating(benchmark::State& state)
{
    const Group& g = group_for(int(state.range(0)));
    const auto ctx = build_context(g);
    const Signature sig(1, {order_set(g).back()});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_generating_tuples(ctx, sig));
    set_label(state, g);
}

} // namespace

BENCHMARK(commutators<false>)->Name("commutator_counts/serial")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(commutators<true>)->Name("commutator_counts/omp")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(convolution<false>)->Name("convolve/serial")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(convolution<true>)->Name("convolve/omp")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(count_generating)->Name("count_generating_tuples")->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
