#include <heatansatz/dynsys.hpp>
#include <heatansatz/operators.hpp>
#include <heatansatz/solution.hpp>

#include <benchmark/benchmark.h>

using namespace heatansatz;

static void BM_Yk(benchmark::State& state)
{
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_Yk(Parity(0), k));
    }
}
BENCHMARK(BM_Yk)->Arg(6)->Arg(10)->Arg(14);

static void BM_Decompose(benchmark::State& state)
{
    const auto dk = compute_Dk(static_cast<unsigned>(state.range(0)));
    const GradedPoly p = dk.back() * dk.front() + dk[dk.size() - 2] * dk[1];
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_basis(p));
    }
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8);

static void BM_RK4(benchmark::State& state)
{
    const RationalH h({MobiusParam(Rational(1), Rational(0)), MobiusParam(Rational(1), Rational(1))});
    const auto field = make_field(AnsatzSpec::reduced(1, Parity(0), GradedPoly(Family::X, 2)));
    const auto s0 = h.state(2.0, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(field, s0, 3.0, 1e-3));
    }
}
BENCHMARK(BM_RK4);
BENCHMARK_MAIN();
