#include <benchmark/benchmark.h>

#include <memory>

#include "normexp/expander.hpp"
#include "normexp/occurrences.hpp"
#include "normexp/pattern.hpp"
#include "normexp/transforms.hpp"

using namespace normexp;


static FiniteWord champernowne_prefix(unsigned base, std::uint64_t n)
{
    ChampernowneStream stream(base);
    return take(stream, n);
}


static void bm_champernowne_stream(benchmark::State& state)
{
    for (auto _ : state) {
        ChampernowneStream stream(2);
        for (std::int64_t i = 0; i < state.range(0); ++i)
            benchmark::DoNotOptimize(stream.next());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_champernowne_stream)->Range(1 << 10, 1 << 20);


static void bm_occurrence_table_dense(benchmark::State& state)
{
    const FiniteWord word = champernowne_prefix(2, 1 << 20);
    for (auto _ : state) {
        OccurrenceTable table(word.alphabet(), static_cast<std::size_t>(state.range(0)));
        table.push(word.symbols());
        benchmark::DoNotOptimize(table.delta());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(word.size()));
}
BENCHMARK(bm_occurrence_table_dense)->Arg(1)->Arg(12)->Arg(20);


static void bm_occurrence_table_sparse(benchmark::State& state)
{
    const FiniteWord word = champernowne_prefix(2, 1 << 20);
    for (auto _ : state) {
        OccurrenceTable table(word.alphabet(), static_cast<std::size_t>(state.range(0)), {1 << 24, true});
        table.push(word.symbols());
        benchmark::DoNotOptimize(table.delta());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(word.size()));
}
BENCHMARK(bm_occurrence_table_sparse)->Arg(54)->Arg(810);


static void bm_expand_word(benchmark::State& state)
{
    ChampernownePatterns patterns(2);
    const ExpansionContext ctx(patterns.pattern(static_cast<unsigned>(state.range(0))));
    const FiniteWord source = champernowne_prefix(2, 1 << 18);
    const FiniteWord aligned = prefix(source, source.size() - source.size() % ctx.source_length());
    std::vector<Symbol> out;
    for (auto _ : state) {
        out.clear();
        ctx.expand_into(aligned.symbols(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(aligned.size()));
}
BENCHMARK(bm_expand_word)->Arg(1)->Arg(4)->Arg(8);


static void bm_sliding_counter(benchmark::State& state)
{
    const FiniteWord word = champernowne_prefix(3, 1 << 20);
    for (auto _ : state) {
        SlidingCounter counter(word.alphabet(), static_cast<std::size_t>(state.range(0)));
        for (Symbol s : word.symbols())
            counter.push(s);
        benchmark::DoNotOptimize(counter.max_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(word.size()));
}
BENCHMARK(bm_sliding_counter)->Arg(1)->Arg(3)->Arg(8);


static void bm_practical_expander(benchmark::State& state)
{
    for (auto _ : state) {
        Expander expander(std::make_unique<TakeStream>(std::make_unique<ChampernowneStream>(2),
                                                       static_cast<std::uint64_t>(state.range(0))),
                          ExpansionSchedule::practical(2));
        std::uint64_t n = 0;
        while (expander.next())
            ++n;
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_practical_expander)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
