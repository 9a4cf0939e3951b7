#include <benchmark/benchmark.h>

#include "hedet/canonical.hpp"
#include "hedet/coloring.hpp"
#include "hedet/graph.hpp"
#include "hedet/named_graphs.hpp"

using namespace hedet;

namespace {

void BM_chromatic_hstar(benchmark::State& state) {
    Graph g = h_star();
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic_hstar);

void BM_tensor_h0_h0_4colorable(benchmark::State& state) {
    Graph t = tensor_product(h0(), h0());
    for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(t, 4));
}
BENCHMARK(BM_tensor_h0_h0_4colorable);

void BM_tensor_h0_grotzsch_unsat(benchmark::State& state) {
    Graph t = tensor_product(h0(), grotzsch());
    for (auto _ : state) benchmark::DoNotOptimize(is_k_colorable(t, 3));
}
BENCHMARK(BM_tensor_h0_grotzsch_unsat);

void BM_critical_hstar(benchmark::State& state) {
    Graph g = h_star();
    for (auto _ : state) benchmark::DoNotOptimize(is_k_critical(g, 5));
}
BENCHMARK(BM_critical_hstar);

void BM_canonical_form_h0(benchmark::State& state) {
    Graph g = h0();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_h0);

void BM_enumerate_order7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(7));
}
BENCHMARK(BM_enumerate_order7)->Unit(benchmark::kMillisecond);

} // namespace
