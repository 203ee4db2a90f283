#include <benchmark/benchmark.h>

#include <random>

#include "rjd/reptheory.hpp"
#include "rjd/zoo.hpp"

using namespace rjd;

static void BM_FieldMul(benchmark::State& state) {
    Field f = make_field(static_cast<int>(state.range(0)));
    std::mt19937 rng(1);
    std::vector<fe> xs(1024);
    for (auto& x : xs) x = static_cast<fe>(rng() % f.size());
    fe acc = 1;
    for (auto _ : state) {
        for (fe x : xs) acc = f.mul(acc ^ x, x | 1);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(16);

static void BM_Rank(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Field f = make_field(static_cast<int>(state.range(1)));
    std::mt19937 rng(2);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<fe>(rng() % f.size()));
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({256, 1})->Args({1024, 1})->Args({256, 4});

static void BM_DoubleProducts(benchmark::State& state) {
    auto a = Algebra::build("DH");
    std::mt19937 rng(3);
    const auto& basis = a->basis();
    for (auto _ : state) {
        Element x = Element::word(basis[rng() % basis.size()]);
        Element y = Element::word(basis[rng() % basis.size()]);
        benchmark::DoNotOptimize(a->mul(x, y));
    }
}
BENCHMARK(BM_DoubleProducts);

static void BM_Simples(benchmark::State& state) {
    auto fa = FDAlgebra::of(Algebra::build("um"));
    for (auto _ : state) {
        RepContext ctx(fa, 1);
        benchmark::DoNotOptimize(ctx.simples().size());
    }
}
BENCHMARK(BM_Simples)->Unit(benchmark::kMillisecond);

static void BM_BandIndecomposable(benchmark::State& state) {
    Field f = make_field(4);
    StringBandSpec s{Family::Aband};
    s.n = static_cast<int>(state.range(0));
    s.lambda = f.generator();
    Module m = make_module(s, f);
    for (auto _ : state) benchmark::DoNotOptimize(indecomposability(m).indecomposable);
}
BENCHMARK(BM_BandIndecomposable)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Strings(benchmark::State& state) {
    auto q = QuiverData::bound_quiver();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_strings(q, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Strings)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
