#include <benchmark/benchmark.h>

#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/search.hpp"
#include "vknot/surface.hpp"

namespace {

const char* kEightCrossing = "O1+O2+O3+O4+U3+U1+U4+U2+";

void BM_parse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(vknot::parse(kEightCrossing));
}
BENCHMARK(BM_parse);

void BM_canonical_form(benchmark::State& state) {
    const auto d = vknot::parse(kEightCrossing);
    for (auto _ : state) benchmark::DoNotOptimize(vknot::canonical_form(d));
}
BENCHMARK(BM_canonical_form);

void BM_enumerate_moves(benchmark::State& state) {
    const auto d = vknot::parse(kEightCrossing);
    for (auto _ : state)
        benchmark::DoNotOptimize(vknot::enumerate_moves(d, vknot::Regime::AllForbidden, 4));
}
BENCHMARK(BM_enumerate_moves);

void BM_bracket(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    // chain of positive kinks sums: O1+U1+O2+U2+... keeps the state space 2^n
    std::string code;
    for (int i = 1; i <= n; ++i)
        code += "O" + std::to_string(i) + "+U" + std::to_string(i) + "+";
    const auto d = vknot::parse(code);
    for (auto _ : state) benchmark::DoNotOptimize(vknot::bracket(d));
}
BENCHMARK(BM_bracket)->Arg(6)->Arg(10)->Arg(14);

void BM_genus(benchmark::State& state) {
    const auto d = vknot::parse(kEightCrossing);
    for (auto _ : state) benchmark::DoNotOptimize(vknot::genus(d));
}
BENCHMARK(BM_genus);

void BM_search_virtual_trefoil(benchmark::State& state) {
    const auto d = vknot::parse("O1+O2+U1+U2+");
    const auto unknot = vknot::parse("@");
    vknot::SearchBudget budget;
    budget.max_nodes = 50'000;
    budget.max_depth = 10;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            vknot::equivalent_within(d, unknot, vknot::Regime::AllForbidden, budget));
}
BENCHMARK(BM_search_virtual_trefoil);

}  // namespace

BENCHMARK_MAIN();
