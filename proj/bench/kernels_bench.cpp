#include <benchmark/benchmark.h>

#include "ipda/builders.hpp"
#include "ipda/kernels.hpp"

using namespace ipda;

namespace {

struct Batch {
    Automaton automaton;
    std::vector<EncodedWord> inputs;
};

// Contour words of a pentagrid ball and their single-edit neighbours.
const Batch& pentagrid_batch() {
    static const Batch batch = [] {
        const auto sys = fibonacci();
        const ContourSpec spec{sys, sys.require("W"), 5, ContourKind::ball};
        Batch b{automaton_for(spec), {}};
        for (std::size_t l = 0; l <= 4; ++l) {
            const auto word = contour_word(spec, l);
            b.inputs.push_back(b.automaton.encode_input(word));
            for (const auto& m : mutate(word, b.automaton.input_alphabet(), l, 40))
                b.inputs.push_back(b.automaton.encode_input(m));
        }
        return b;
    }();
    return batch;
}

const Automaton& sector_automaton_w() {
    static const Automaton a = [] {
        const auto sys = fibonacci();
        return sector_automaton(sys, sys.require("W"));
    }();
    return a;
}

void BM_AcceptBatchSerial(benchmark::State& state) {
    const Batch& b = pentagrid_batch();
    for (auto _ : state)
        benchmark::DoNotOptimize(accept_batch_serial(b.automaton, b.inputs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.inputs.size()));
}

void BM_AcceptBatch(benchmark::State& state) {
    const Batch& b = pentagrid_batch();
    for (auto _ : state)
        benchmark::DoNotOptimize(accept_batch(b.automaton, b.inputs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.inputs.size()));
}

void BM_SweepSerial(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_serial(sector_automaton_w(), m));
}

void BM_Sweep(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(sector_automaton_w(), m));
}

} // namespace

BENCHMARK(BM_AcceptBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AcceptBatch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
