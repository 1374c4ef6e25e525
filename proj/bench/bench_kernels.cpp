// Serial reference vs OpenMP kernel, side by side.

#include "planar/char_sums.hpp"
#include "planar/planarity.hpp"
#include "planar/search.hpp"

#include <benchmark/benchmark.h>

using namespace planar;

namespace {

void BM_planar_serial(benchmark::State& state)
{
    const Field f(3, static_cast<unsigned>(state.range(0)));
    const auto g = from_monomial(f, 14);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_planar_serial(f, g));
}

void BM_planar_omp(benchmark::State& state)
{
    const Field f(3, static_cast<unsigned>(state.range(0)));
    const auto g = from_monomial(f, 14);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_planar(f, g));
}

std::vector<ElementPair> all_pairs(const Field& f)
{
    std::vector<ElementPair> out;
    for (std::uint32_t a = 1; a < f.q(); ++a)
        for (std::uint32_t b = 0; b < f.q(); ++b)
            out.emplace_back(Element{a}, Element{b});
    return out;
}

void BM_decompose_serial(benchmark::State& state)
{
    const Field f(static_cast<Residue>(state.range(0)), 2);
    const auto g = from_monomial(f, 2);
    const auto pairs = all_pairs(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_all_serial(f, g, pairs));
}

void BM_decompose_omp(benchmark::State& state)
{
    const Field f(static_cast<Residue>(state.range(0)), 2);
    const auto g = from_monomial(f, 2);
    const auto pairs = all_pairs(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_all(f, g, pairs));
}

void BM_search_serial(benchmark::State& state)
{
    const auto problem = SearchProblem::normalized(build_context(static_cast<Residue>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_serial(problem));
}

void BM_search_omp(benchmark::State& state)
{
    const auto problem = SearchProblem::normalized(build_context(static_cast<Residue>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(problem));
}

} // namespace

BENCHMARK(BM_planar_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_planar_omp)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_decompose_serial)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decompose_omp)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_serial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_search_omp)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
