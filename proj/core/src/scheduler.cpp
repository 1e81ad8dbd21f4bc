#include "swport/scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace swport::sched {

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::QuerySplit: return "query-split";
    case Strategy::DbSplit: return "db-split";
    case Strategy::CapabilityAware: return "capability-aware";
    case Strategy::WorkStealing: return "work-stealing";
    }
    return "?";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "query-split") return Strategy::QuerySplit;
    if (name == "db-split") return Strategy::DbSplit;
    if (name == "capability-aware") return Strategy::CapabilityAware;
    if (name == "work-stealing") return Strategy::WorkStealing;
    throw ParseError("unknown strategy \"" + name +
                     "\" (expected query-split, db-split, capability-aware or "
                     "work-stealing)");
}

std::uint64_t Assignment::worker_cells(std::size_t w) const {
    std::uint64_t total = 0;
    for (const SearchTask& t : per_worker.at(w))
        total += t.cell_count;
    return total;
}

std::uint64_t Assignment::total_cells() const {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < per_worker.size(); ++w)
        total += worker_cells(w);
    return total;
}

PartitionedDb partition_by_length(std::span<const Sequence> database,
                                  std::size_t threshold) {
    PartitionedDb out;
    for (std::size_t i = 0; i < database.size(); ++i) {
        if (database[i].length() <= threshold)
            out.short_indices.push_back(i);
        else
            out.long_indices.push_back(i);
    }
    return out;
}

namespace {

Assignment round_robin(std::span<const SearchTask> tasks, std::size_t n_workers) {
    Assignment a;
    a.strategy = Strategy::QuerySplit;
    a.per_worker.resize(n_workers);
    for (std::size_t i = 0; i < tasks.size(); ++i)
        a.per_worker[i % n_workers].push_back(tasks[i]);
    return a;
}

double assignment_makespan(const Assignment& a, std::span<const WorkerSpec> workers) {
    double worst = 0.0;
    for (std::size_t w = 0; w < a.per_worker.size(); ++w)
        worst = std::max(worst, static_cast<double>(a.worker_cells(w)) /
                                    (workers[w].peak_gcups * 1e9));
    return worst;
}

// Largest task first, each placed on the worker that would finish it
// earliest under the 1/peak cost model; ties go to the lowest worker index.
Assignment greedy_lpt(std::span<const SearchTask> tasks,
                      std::span<const WorkerSpec> workers) {
    std::vector<std::size_t> order(tasks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return tasks[a].cell_count > tasks[b].cell_count;
    });

    Assignment a;
    a.strategy = Strategy::CapabilityAware;
    a.per_worker.resize(workers.size());
    std::vector<double> finish(workers.size(), 0.0);
    for (std::size_t idx : order) {
        std::size_t pick = 0;
        double best_time = 0.0;
        for (std::size_t w = 0; w < workers.size(); ++w) {
            const double t = finish[w] + static_cast<double>(tasks[idx].cell_count) /
                                             (workers[w].peak_gcups * 1e9);
            if (w == 0 || t < best_time) {
                pick = w;
                best_time = t;
            }
        }
        finish[pick] = best_time;
        a.per_worker[pick].push_back(tasks[idx]);
    }
    return a;
}

} // namespace

Assignment distribute_tasks(std::span<const SearchTask> tasks,
                            std::span<const WorkerSpec> workers, Strategy strategy) {
    if (workers.empty())
        throw NoWorkers("cannot distribute work to zero workers");
    if (tasks.empty())
        throw NoQueries("no tasks to distribute");

    switch (strategy) {
    case Strategy::QuerySplit:
        return round_robin(tasks, workers.size());

    case Strategy::DbSplit: {
        // Every worker sees every task, at 1/W of its cost; the residue goes
        // to the first workers so the per-task sum is conserved exactly.
        Assignment a;
        a.strategy = Strategy::DbSplit;
        a.per_worker.resize(workers.size());
        for (const SearchTask& t : tasks) {
            const std::uint64_t share = t.cell_count / workers.size();
            const std::uint64_t extra = t.cell_count % workers.size();
            for (std::size_t w = 0; w < workers.size(); ++w) {
                SearchTask piece = t;
                piece.cell_count = share + (w < extra ? 1 : 0);
                if (piece.cell_count > 0)
                    a.per_worker[w].push_back(piece);
            }
        }
        return a;
    }

    case Strategy::CapabilityAware: {
        // Greedy placement can lose to round-robin on adversarial task
        // orders, so keep whichever layout the cost model says is faster;
        // the strategy is then never worse than QuerySplit by construction.
        Assignment lpt = greedy_lpt(tasks, workers);
        Assignment rr = round_robin(tasks, workers.size());
        if (assignment_makespan(rr, workers) < assignment_makespan(lpt, workers)) {
            rr.strategy = Strategy::CapabilityAware;
            return rr;
        }
        return lpt;
    }

    case Strategy::WorkStealing:
        throw ParseError("work-stealing has no static assignment; it is only "
                         "available through run_search");
    }
    throw ParseError("unhandled strategy");
}

Assignment distribute(std::span<const Sequence> queries,
                      std::span<const Sequence> database,
                      std::span<const WorkerSpec> workers, Strategy strategy) {
    if (workers.empty())
        throw NoWorkers("cannot distribute work to zero workers");
    if (queries.empty())
        throw NoQueries("no queries to distribute");
    if (database.empty())
        throw NoTargets("database is empty");

    std::uint64_t db_residues = 0;
    for (const Sequence& s : database)
        db_residues += s.length();

    std::vector<SearchTask> tasks(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        tasks[qi].query_index = qi;
        tasks[qi].target_begin = 0;
        tasks[qi].target_end = database.size();
        tasks[qi].cell_count = static_cast<std::uint64_t>(queries[qi].length()) * db_residues;
    }

    if (strategy != Strategy::DbSplit)
        return distribute_tasks(tasks, workers, strategy);

    // DbSplit: cut the database once into near-equal residue chunks at
    // sequence boundaries, then give every query one chunk per worker.
    const std::size_t W = workers.size();
    std::vector<std::size_t> cuts(W + 1, 0);
    cuts[W] = database.size();
    std::uint64_t running = 0;
    std::size_t seq = 0;
    for (std::size_t w = 1; w < W; ++w) {
        const std::uint64_t goal = db_residues * w / W;
        while (seq < database.size() && running < goal)
            running += database[seq++].length();
        cuts[w] = seq;
    }

    Assignment a;
    a.strategy = Strategy::DbSplit;
    a.per_worker.resize(W);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        for (std::size_t w = 0; w < W; ++w) {
            if (cuts[w] == cuts[w + 1])
                continue;
            SearchTask t;
            t.query_index = qi;
            t.target_begin = cuts[w];
            t.target_end = cuts[w + 1];
            std::uint64_t chunk_residues = 0;
            for (std::size_t s = t.target_begin; s < t.target_end; ++s)
                chunk_residues += database[s].length();
            t.cell_count = static_cast<std::uint64_t>(queries[qi].length()) * chunk_residues;
            a.per_worker[w].push_back(t);
        }
    }
    return a;
}

MakespanEstimate estimate_makespan(const Assignment& assignment,
                                   std::span<const WorkerSpec> workers) {
    if (workers.empty())
        throw NoWorkers("no worker specs given");
    if (assignment.per_worker.size() > workers.size())
        throw UnknownWorker("assignment uses " +
                            std::to_string(assignment.per_worker.size()) +
                            " workers but only " + std::to_string(workers.size()) +
                            " specs were given");
    MakespanEstimate est;
    est.worker_seconds.resize(assignment.per_worker.size());
    for (std::size_t w = 0; w < assignment.per_worker.size(); ++w) {
        if (workers[w].peak_gcups <= 0.0)
            throw UnknownWorker("worker \"" + workers[w].id +
                                "\" has a non-positive peak");
        est.worker_seconds[w] = static_cast<double>(assignment.worker_cells(w)) /
                                (workers[w].peak_gcups * 1e9);
    }
    est.makespan = *std::max_element(est.worker_seconds.begin(), est.worker_seconds.end());
    est.mean_seconds =
        std::accumulate(est.worker_seconds.begin(), est.worker_seconds.end(), 0.0) /
        static_cast<double>(est.worker_seconds.size());
    est.imbalance = est.mean_seconds > 0.0 ? est.makespan / est.mean_seconds : 1.0;
    return est;
}

// --- threaded execution ------------------------------------------------------

namespace {

struct RawHit {
    std::size_t target_index;
    std::int32_t score;
    std::size_t end_q, end_d;
};

// Everything one worker produced for one task.
struct TaskOutput {
    std::size_t query_index = 0;
    std::vector<RawHit> hits;
};

void run_task(const SearchTask& task, std::span<const Sequence> queries,
              std::span<const Sequence> database, const ScoringScheme& scheme,
              const SearchConfig& config, TaskOutput& out,
              std::uint64_t& cell_updates) {
    out.query_index = task.query_index;
    const Sequence& query = queries[task.query_index];

    std::span<const Sequence> slice =
        database.subspan(task.target_begin, task.target_end - task.target_begin);
    PartitionedDb parts = partition_by_length(slice, config.threshold);
    kernels::KernelStats stats;

    if (!parts.short_indices.empty()) {
        std::vector<Sequence> shorts;
        shorts.reserve(parts.short_indices.size());
        for (std::size_t i : parts.short_indices)
            shorts.push_back(slice[i]);
        kernels::SequenceBatch batch(query, std::move(shorts), config.lane_width);
        std::vector<AlignmentResult> res = kernels::batch_score(batch, scheme, 1, &stats);
        for (std::size_t i = 0; i < res.size(); ++i)
            out.hits.push_back({task.target_begin + parts.short_indices[i],
                                res[i].score, res[i].end_q, res[i].end_d});
    }
    kernels::WavefrontConfig wf = config.wavefront;
    wf.workers = 1;  // parallelism lives at the scheduler level here
    for (std::size_t i : parts.long_indices) {
        AlignmentResult r = kernels::wavefront_score(query, slice[i], scheme, wf, &stats);
        out.hits.push_back({task.target_begin + i, r.score, r.end_q, r.end_d});
    }
    cell_updates += stats.cell_updates;
}

} // namespace

SearchOutcome run_search(std::span<const Sequence> queries,
                         std::span<const Sequence> database,
                         const ScoringScheme& scheme, const SearchConfig& config,
                         std::span<const WorkerSpec> worker_specs) {
    if (config.workers == 0)
        throw NoWorkers("run_search needs at least one worker");
    if (queries.empty())
        throw NoQueries("no queries given");
    if (database.empty())
        throw NoTargets("database is empty");
    scheme.validate();

    const std::size_t W = config.workers;
    std::vector<WorkerSpec> default_specs;
    if (worker_specs.empty()) {
        default_specs.resize(W);
        for (std::size_t w = 0; w < W; ++w)
            default_specs[w] = {"worker-" + std::to_string(w), 1.0, config.lane_width};
        worker_specs = default_specs;
    } else if (worker_specs.size() != W) {
        throw UnknownWorker("got " + std::to_string(worker_specs.size()) +
                            " worker specs for " + std::to_string(W) + " workers");
    }

    // Per-worker task lists (static strategies) or a shared pool (stealing).
    std::vector<SearchTask> pool_tasks;
    Assignment assignment;
    const bool stealing = config.strategy == Strategy::WorkStealing;
    if (stealing) {
        std::uint64_t db_residues = 0;
        for (const Sequence& s : database)
            db_residues += s.length();
        pool_tasks.resize(queries.size());
        for (std::size_t qi = 0; qi < queries.size(); ++qi)
            pool_tasks[qi] = {qi, 0, database.size(),
                              static_cast<std::uint64_t>(queries[qi].length()) * db_residues};
    } else {
        assignment = distribute(queries, database, worker_specs, config.strategy);
    }

    std::vector<std::vector<TaskOutput>> outputs(W);
    std::vector<std::uint64_t> updates(W, 0);
    std::vector<double> worker_seconds(W, 0.0);
    std::atomic<std::size_t> next_task{0};

    auto worker_main = [&](std::size_t w) {
        const auto t0 = std::chrono::steady_clock::now();
        if (stealing) {
            for (std::size_t idx = next_task.fetch_add(1); idx < pool_tasks.size();
                 idx = next_task.fetch_add(1)) {
                TaskOutput out;
                run_task(pool_tasks[idx], queries, database, scheme, config, out, updates[w]);
                outputs[w].push_back(std::move(out));
            }
        } else {
            for (const SearchTask& task : assignment.per_worker[w]) {
                TaskOutput out;
                run_task(task, queries, database, scheme, config, out, updates[w]);
                outputs[w].push_back(std::move(out));
            }
        }
        worker_seconds[w] = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    };

    const auto wall0 = std::chrono::steady_clock::now();
    std::vector<std::thread> threads;
    threads.reserve(W - 1);
    for (std::size_t w = 1; w < W; ++w)
        threads.emplace_back(worker_main, w);
    worker_main(0);
    for (auto& th : threads)
        th.join();
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();

    // Merge: group hits per query, then keep the top-k.  The comparison is a
    // total order (score desc, id asc, index asc), so the outcome does not
    // depend on which worker produced which hit.
    std::uint64_t db_residues = 0;
    for (const Sequence& s : database)
        db_residues += s.length();

    std::vector<std::vector<RawHit>> per_query(queries.size());
    for (std::size_t w = 0; w < W; ++w)
        for (TaskOutput& out : outputs[w])
            for (const RawHit& h : out.hits)
                per_query[out.query_index].push_back(h);

    SearchOutcome outcome;
    outcome.per_query.resize(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        auto& hits = per_query[qi];
        std::sort(hits.begin(), hits.end(), [&](const RawHit& a, const RawHit& b) {
            if (a.score != b.score)
                return a.score > b.score;
            const std::string& ia = database[a.target_index].id;
            const std::string& ib = database[b.target_index].id;
            if (ia != ib)
                return ia < ib;
            return a.target_index < b.target_index;
        });
        QueryResult& qr = outcome.per_query[qi];
        qr.query_id = queries[qi].id;
        qr.cell_count = static_cast<std::uint64_t>(queries[qi].length()) * db_residues;
        const std::size_t k = std::min(config.top_k, hits.size());
        qr.top.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            qr.top.push_back({database[hits[i].target_index].id, hits[i].score,
                              hits[i].end_q, hits[i].end_d});
        outcome.total_cells += qr.cell_count;
    }

    outcome.worker_seconds = worker_seconds;
    outcome.wall_seconds = wall;
    for (std::uint64_t u : updates)
        outcome.kernel_cell_updates += u;
    outcome.gcups = wall > 0.0 ? static_cast<double>(outcome.total_cells) / (wall * 1e9) : 0.0;
    return outcome;
}

} // namespace swport::sched
