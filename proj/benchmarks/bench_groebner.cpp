#include <benchmark/benchmark.h>

#include "hedet/encode.hpp"
#include "hedet/graph.hpp"
#include "hedet/groebner.hpp"
#include "hedet/named_graphs.hpp"
#include "hedet/poly_text.hpp"

using namespace hedet;

namespace {

Ideal cyclic3() {
    std::vector<Polynomial> gens = {
        parse_polynomial("x_1 + x_2 + x_3"),
        parse_polynomial("x_1*x_2 + x_2*x_3 + x_1*x_3"),
        parse_polynomial("x_1*x_2*x_3 - 1"),
    };
    return Ideal::make(
        VarUniverse::of({Variable::x(1), Variable::x(2), Variable::x(3)}),
        std::move(gens), "cyclic3");
}

void BM_buchberger_cyclic3_lex(benchmark::State& state) {
    Ideal ideal = cyclic3();
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger(ideal, MonomialOrder::lex()));
}
BENCHMARK(BM_buchberger_cyclic3_lex);

void BM_assemble_Jcal_344(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(assemble_Jcal(3, 4, 4));
}
BENCHMARK(BM_assemble_Jcal_344);

void BM_assemble_L_h0_h0(benchmark::State& state) {
    Graph g = h0();
    for (auto _ : state) benchmark::DoNotOptimize(assemble_L(g, g, 4));
}
BENCHMARK(BM_assemble_L_h0_h0);

void BM_edge_elimination_333(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tilde_J(3, 3, 3));
}
BENCHMARK(BM_edge_elimination_333)->Unit(benchmark::kMillisecond);

void BM_unit_check_c5_c5(benchmark::State& state) {
    Ideal l = assemble_L(Graph::cycle(5), Graph::cycle(5), 3);
    for (auto _ : state) benchmark::DoNotOptimize(contains_one(l));
}
BENCHMARK(BM_unit_check_c5_c5);

void BM_unit_check_h0_h0(benchmark::State& state) {
    Ideal l = assemble_L(h0(), h0(), 4);
    for (auto _ : state) benchmark::DoNotOptimize(contains_one(l));
}
BENCHMARK(BM_unit_check_h0_h0)->Unit(benchmark::kMillisecond);

void BM_normal_form_tail(benchmark::State& state) {
    Ideal ideal = cyclic3();
    GbResult gb = buchberger(ideal, MonomialOrder::grevlex());
    Polynomial probe = parse_polynomial("x_1^4 + x_2^4 + x_3^4 - 3*x_1*x_2");
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(probe, gb.gb.basis, gb.gb.order));
}
BENCHMARK(BM_normal_form_tail);

} // namespace

BENCHMARK_MAIN();
