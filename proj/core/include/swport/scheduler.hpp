#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swport/batch.hpp"
#include "swport/wavefront.hpp"

namespace swport::sched {

// A compute worker as the cost model sees it: relative speed in billions of
// cell updates per second.  lanes is informational (batch width hint).
struct WorkerSpec {
    std::string id;
    double peak_gcups = 1.0;
    std::size_t lanes = 8;
};

// One schedulable unit: a query index plus the database slice it must scan.
// cell_count = |query| * sum of the slice's target lengths, which is the cost
// model's work measure.
struct SearchTask {
    std::size_t query_index = 0;
    std::size_t target_begin = 0;  // half-open range into the database
    std::size_t target_end = 0;
    std::uint64_t cell_count = 0;
};

enum class Strategy {
    QuerySplit,       // queries dealt round-robin, whole database each
    DbSplit,          // every query everywhere, database cut per worker
    CapabilityAware,  // cost-model-driven placement (see distribute)
    WorkStealing,     // dynamic pulling; run_search only, no static assignment
};

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct Assignment {
    Strategy strategy = Strategy::QuerySplit;
    std::vector<std::vector<SearchTask>> per_worker;

    std::uint64_t worker_cells(std::size_t w) const;
    std::uint64_t total_cells() const;
};

// Splits the database at `threshold` residues: sequences short enough for the
// lane batch kernel vs. long ones for the wavefront kernel.  Order is kept
// within each part ("stable"); a sequence of exactly threshold length counts
// as short.
struct PartitionedDb {
    std::vector<std::size_t> short_indices;
    std::vector<std::size_t> long_indices;
};
PartitionedDb partition_by_length(std::span<const Sequence> database,
                                  std::size_t threshold = 2000);

// Builds the static assignment for one of the three static strategies.
//
//  - QuerySplit: query q goes to worker q mod W with the whole database.
//  - DbSplit: each query is cut into one contiguous database chunk per
//    worker, split at sequence boundaries with near-equal residue counts
//    (meant for the workers > queries regime).
//  - CapabilityAware: per-query tasks placed greedily, largest first, onto
//    the worker with the earliest finish time under the 1/peak_gcups cost
//    model; the round-robin layout is kept instead whenever it would finish
//    sooner, so this strategy never estimates worse than QuerySplit.
//
// Throws NoWorkers / NoQueries / NoTargets on empty inputs.
Assignment distribute(std::span<const Sequence> queries,
                      std::span<const Sequence> database,
                      std::span<const WorkerSpec> workers, Strategy strategy);

// Same placement logic on pre-costed tasks (used by the simulator, where no
// real sequences exist).  DbSplit slices every task into one equal-cost piece
// per worker.
Assignment distribute_tasks(std::span<const SearchTask> tasks,
                            std::span<const WorkerSpec> workers, Strategy strategy);

// Cost-model times for a static assignment: per-worker seconds
// (cells / (peak_gcups * 1e9)), the makespan (slowest worker) and the
// imbalance ratio makespan / mean.  Throws UnknownWorker when the assignment
// references more workers than specs are given.
struct MakespanEstimate {
    std::vector<double> worker_seconds;
    double makespan = 0.0;
    double mean_seconds = 0.0;
    double imbalance = 1.0;
};
MakespanEstimate estimate_makespan(const Assignment& assignment,
                                   std::span<const WorkerSpec> workers);

// --- threaded execution ------------------------------------------------------

struct Hit {
    std::string target_id;
    std::int32_t score = 0;
    std::size_t end_q = 0;
    std::size_t end_d = 0;
};

struct QueryResult {
    std::string query_id;
    std::uint64_t cell_count = 0;  // |query| * sum(|database|)
    std::vector<Hit> top;          // best scores, ties by ascending target id
};

struct SearchConfig {
    std::size_t threshold = 2000;
    std::size_t workers = 1;
    std::size_t top_k = 10;
    std::size_t lane_width = 8;
    Strategy strategy = Strategy::QuerySplit;
    kernels::WavefrontConfig wavefront;  // tile_rows etc. for the long-sequence kernel
};

struct SearchOutcome {
    std::vector<QueryResult> per_query;     // ordered like the input queries
    std::vector<double> worker_seconds;     // wall time of each worker thread
    double wall_seconds = 0.0;              // parallel section wall time
    std::uint64_t total_cells = 0;          // nominal sum over queries
    std::uint64_t kernel_cell_updates = 0;  // work actually done (incl. padding)
    double gcups = 0.0;                     // total_cells / (wall * 1e9)
};

// Runs every query against the database on config.workers host threads.
// Short targets go through the batch kernel, long ones through the wavefront
// kernel.  Scores, end coordinates and top-k tables are identical for every
// strategy and worker count; only the timing side-band varies.  Worker specs,
// when given, weight CapabilityAware placement (defaults to equal peaks).
SearchOutcome run_search(std::span<const Sequence> queries,
                         std::span<const Sequence> database,
                         const ScoringScheme& scheme, const SearchConfig& config,
                         std::span<const WorkerSpec> worker_specs = {});

} // namespace swport::sched
