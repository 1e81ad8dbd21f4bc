// Microbenchmarks for the three alignment kernels and the search harness.
// Every benchmark reports a GCUPS counter (billions of cell updates per
// second, computed from the nominal |query| x |database| product) so the
// numbers line up with the capability model and the bench subcommand.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "swport/batch.hpp"
#include "swport/scalar_align.hpp"
#include "swport/scheduler.hpp"
#include "swport/score_matrix_io.hpp"
#include "swport/wavefront.hpp"

namespace {

using namespace swport;

Sequence random_sequence(std::mt19937& rng, const std::string& symbols,
                         std::size_t len, const std::string& id) {
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    Sequence s{id, {}};
    s.residues.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.residues.push_back(symbols[pick(rng)]);
    return s;
}

void set_gcups(benchmark::State& state, std::uint64_t cells_per_iteration) {
    state.counters["GCUPS"] = benchmark::Counter(
        static_cast<double>(cells_per_iteration) * 1e-9 *
            static_cast<double>(state.iterations()),
        benchmark::Counter::kIsRate);
}

void BM_ScalarScore(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    const Sequence query = random_sequence(rng, "ACGT", n, "q");
    const Sequence database = random_sequence(rng, "ACGT", n, "d");
    const ScoringScheme scheme = dna_scheme();
    for (auto _ : state)
        benchmark::DoNotOptimize(align::score_local(query, database, scheme));
    set_gcups(state, static_cast<std::uint64_t>(n) * n);
}
BENCHMARK(BM_ScalarScore)->Arg(256)->Arg(1024);

void BM_ScalarTraceback(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(2);
    const Sequence query = random_sequence(rng, "ACGT", n, "q");
    const Sequence database = random_sequence(rng, "ACGT", n, "d");
    const ScoringScheme scheme = dna_scheme();
    for (auto _ : state)
        benchmark::DoNotOptimize(align::traceback_local(query, database, scheme));
    set_gcups(state, static_cast<std::uint64_t>(n) * n);
}
BENCHMARK(BM_ScalarTraceback)->Arg(256)->Arg(1024);

// One protein query against 64 short targets; the argument is the lane width.
void BM_BatchScore(benchmark::State& state) {
    const std::size_t lanes = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(3);
    const std::string protein = "ARNDCQEGHILKMFPSTWYV";
    const Sequence query = random_sequence(rng, protein, 256, "q");
    std::vector<Sequence> targets;
    std::uint64_t db_residues = 0;
    for (int i = 0; i < 64; ++i) {
        targets.push_back(random_sequence(rng, protein, 128 + (i * 29) % 256,
                                          "t" + std::to_string(i)));
        db_residues += targets.back().length();
    }
    const ScoringScheme scheme = io::blosum62_scheme();
    const kernels::SequenceBatch batch(query, targets, lanes);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::batch_score(batch, scheme));
    set_gcups(state, query.length() * db_residues);
}
BENCHMARK(BM_BatchScore)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

// One long DNA pair; the argument is the strip height in query rows.
void BM_WavefrontScore(benchmark::State& state) {
    const std::size_t tile_rows = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(4);
    const Sequence query = random_sequence(rng, "ACGT", 1024, "q");
    const Sequence database = random_sequence(rng, "ACGT", 1024, "d");
    const ScoringScheme scheme = dna_scheme();
    kernels::WavefrontConfig config;
    config.tile_rows = tile_rows;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kernels::wavefront_score(query, database, scheme, config));
    set_gcups(state, query.length() * database.length());
}
BENCHMARK(BM_WavefrontScore)->Arg(8)->Arg(64)->Arg(256);

// Banded variant: the band multiplies the cell count it actually visits.
void BM_WavefrontBanded(benchmark::State& state) {
    const std::size_t band = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(5);
    const Sequence query = random_sequence(rng, "ACGT", 2048, "q");
    const Sequence database = random_sequence(rng, "ACGT", 2048, "d");
    const ScoringScheme scheme = dna_scheme();
    kernels::WavefrontConfig config;
    config.band = band;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kernels::wavefront_score(query, database, scheme, config));
    set_gcups(state, query.length() * database.length());
}
BENCHMARK(BM_WavefrontBanded)->Arg(64)->Arg(512);

// Whole harness: a handful of queries over a small mixed-length database.
void BM_Search(benchmark::State& state) {
    const std::size_t workers = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(6);
    const std::string protein = "ARNDCQEGHILKMFPSTWYV";
    std::vector<Sequence> queries;
    for (int i = 0; i < 4; ++i)
        queries.push_back(random_sequence(rng, protein, 200, "q" + std::to_string(i)));
    std::vector<Sequence> database;
    std::uint64_t db_residues = 0;
    for (int i = 0; i < 400; ++i) {
        database.push_back(random_sequence(rng, protein, 40 + (i * 53) % 400,
                                           "t" + std::to_string(i)));
        db_residues += database.back().length();
    }
    const ScoringScheme scheme = io::blosum62_scheme();
    sched::SearchConfig config;
    config.workers = workers;
    for (auto _ : state)
        benchmark::DoNotOptimize(sched::run_search(queries, database, scheme, config));
    set_gcups(state, 4ull * 200 * db_residues);
}
BENCHMARK(BM_Search)->Arg(1)->Arg(4)->MeasureProcessCPUTime()->UseRealTime();

} // namespace

BENCHMARK_MAIN();
