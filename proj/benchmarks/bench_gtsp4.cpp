#include "gtsp4/action.hpp"
#include "gtsp4/gtbasis.hpp"
#include "gtsp4/ideal.hpp"

#include <benchmark/benchmark.h>

using namespace gtsp4;

namespace {

HighestWeight weight_arg(const benchmark::State& st)
{
    return HighestWeight{HalfInt::from_twice(st.range(0)), HalfInt::from_twice(st.range(1))};
}

void BM_GtBasis(benchmark::State& st)
{
    auto w = weight_arg(st);
    for (auto _ : st) benchmark::DoNotOptimize(gt_basis(w));
}
BENCHMARK(BM_GtBasis)->Args({2, 0})->Args({2, 2})->Args({3, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_GeneratorMatrices(benchmark::State& st)
{
    auto w = weight_arg(st);
    for (auto _ : st) {
        GTModule m = GTModule::build(w);
        benchmark::DoNotOptimize(all_generator_matrices(m));
    }
}
BENCHMARK(BM_GeneratorMatrices)->Args({2, 0})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& st)
{
    auto b = gt_basis(HighestWeight::ints(1, 1));
    Poly p = b.front() * b.back() * b[b.size() / 2];
    for (auto _ : st) benchmark::DoNotOptimize(sp_normal_form(p));
}
BENCHMARK(BM_NormalForm);

} // namespace

BENCHMARK_MAIN();
