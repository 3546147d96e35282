#include <benchmark/benchmark.h>

#include "ptower/builtin_groups.hpp"
#include "ptower/groupcore.hpp"
#include "ptower/magnus.hpp"
#include "ptower/quadforms.hpp"

using namespace ptower;

/* Each kernel is registered twice: arg 0 runs the serial reference, arg 1 the OpenMP path. */

namespace {

Exec exec_of(benchmark::State const & state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State & state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void bm_enumerate_forms(benchmark::State & state)
{
    BigInt D(-19399380);
    for (auto _ : state)
        benchmark::DoNotOptimize(quadforms::enumerate_reduced_forms(D, exec_of(state)));
    label(state);
}

void bm_torsion_profile(benchmark::State & state)
{
    auto forms = quadforms::enumerate_reduced_forms(BigInt(-19399380), Exec::serial);
    for (auto _ : state)
        benchmark::DoNotOptimize(quadforms::torsion_profile(forms, 3, 2, exec_of(state)));
    label(state);
}

void bm_associativity(benchmark::State & state)
{
    auto g = groupcore::builtin_group("C3wrC3");
    auto flat = g.flat();
    for (auto _ : state)
        benchmark::DoNotOptimize(groupcore::find_nonassociative_triple(flat, g.order(), exec_of(state)));
    label(state);
}

void bm_free_quotient_table(benchmark::State & state)
{
    for (auto _ : state) {
        magnus::FreeQuotient q(3, 2, 4, exec_of(state));
        benchmark::DoNotOptimize(q.table().order());
    }
    label(state);
}

} // namespace

BENCHMARK(bm_enumerate_forms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_torsion_profile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_associativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_free_quotient_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
