// Command-line front end: align / search / peak / pp / simulate / bench.
//
// Human-readable output by default; --jsonl switches stdout to one JSON
// record per line (schema versioned via the "v" field) for scripting and
// golden tests.  --no-timing drops wall-clock-derived fields so identical
// inputs produce byte-identical output.  Diagnostics and warnings go to
// stderr; every library error maps to its own exit code.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "swport/batch.hpp"
#include "swport/device_registry.hpp"
#include "swport/errors.hpp"
#include "swport/fasta.hpp"
#include "swport/perf_model.hpp"
#include "swport/portability.hpp"
#include "swport/scalar_align.hpp"
#include "swport/scheduler.hpp"
#include "swport/score_matrix_io.hpp"
#include "swport/scoring.hpp"
#include "swport/wavefront.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool jsonl = false;
    bool no_timing = false;
};

void warn(const std::string& message) {
    std::cerr << "warning: " << message << '\n';
}

void emit(const ordered_json& record) {
    std::cout << record.dump() << '\n';
}

// Every library error class gets a stable exit code so shell callers can
// branch on the failure kind without parsing stderr.
int exit_code(const swport::Error& e) {
    static const std::map<std::string, int> codes = {
        {"EmptySequence", 10},  {"AlphabetMismatch", 11},
        {"MatrixTooLarge", 12}, {"EmptyBatch", 13},
        {"NoWorkers", 14},      {"NoQueries", 15},
        {"NoTargets", 16},      {"UnknownWorker", 17},
        {"NonPositiveTime", 18},{"ZeroPeak", 19},
        {"MissingRecord", 20},  {"NoRecords", 21},
        {"MalformedHeader", 22},{"EmptyRecord", 23},
        {"RaggedMatrix", 24},   {"UnknownSymbolDuplicate", 25},
        {"ParseError", 26},
    };
    const auto it = codes.find(e.name());
    return it == codes.end() ? 9 : it->second;
}

double elapsed_seconds(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
        .count();
}

std::string lowercase(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// ---- file loading -----------------------------------------------------------

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw swport::ParseError("cannot open \"" + path + '"');
    return in;
}

std::vector<swport::Sequence> load_fasta(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    const auto records = swport::io::parse_fasta(in);
    if (records.empty())
        throw swport::EmptyRecord("no sequences in \"" + path + '"');
    return swport::io::to_sequences(records);
}

// ---- scoring flags shared by align / search / bench -------------------------

struct ScoringOpts {
    std::int32_t match = 1;
    std::int32_t mismatch = -3;
    std::int32_t gap_open = 5;
    std::int32_t gap_extend = 2;
    std::string matrix;  // file path, or "blosum62" for the embedded copy
    CLI::Option* open_opt = nullptr;
    CLI::Option* extend_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--match", match, "match score (DNA mode)")
            ->capture_default_str();
        cmd->add_option("--mismatch", mismatch, "mismatch score (DNA mode)")
            ->capture_default_str();
        open_opt = cmd->add_option("--gap-open", gap_open,
                                   "gap open penalty (default 5, or 10 with --matrix)");
        extend_opt = cmd->add_option("--gap-extend", gap_extend,
                                     "gap extension penalty (default 2)");
        cmd->add_option("--matrix", matrix,
                        "substitution matrix file in NCBI layout, or 'blosum62' "
                        "for the embedded copy; switches to the matrix alphabet");
    }

    swport::ScoringScheme scheme() const {
        if (matrix.empty())
            return swport::dna_scheme(match, mismatch, gap_open, gap_extend);
        swport::ScoringScheme s;
        if (lowercase(matrix) == "blosum62") {
            s.matrix = swport::io::blosum62();
        } else {
            std::ifstream in = open_or_throw(matrix);
            s.matrix = swport::io::parse_score_matrix(in);
        }
        // The usual protein penalties unless the user said otherwise.
        s.gap_open = (open_opt && open_opt->count()) ? gap_open : 10;
        s.gap_extend = (extend_opt && extend_opt->count()) ? gap_extend : 2;
        return s;
    }
};

void warn_scheme(const swport::ScoringScheme& scheme) {
    for (const std::string& w : scheme.warnings())
        warn(w);
}

void warn_wildcards(const swport::Sequence& seq, const swport::Alphabet& alphabet) {
    const auto encoded = swport::encode(seq.residues, alphabet);
    if (encoded.wildcard_substitutions > 0)
        warn('"' + seq.id + "\": " + std::to_string(encoded.wildcard_substitutions) +
             " residue(s) outside the alphabet scored as the wildcard");
}

// ---- align -------------------------------------------------------------------

struct AlignOpts {
    std::string query_path;
    std::string db_path;
    ScoringOpts scoring;
    bool traceback = false;
    std::string kernel = "scalar";
    std::size_t tile_rows = 64;
    std::int64_t band = -1;  // < 0: no band
    std::size_t workers = 1;
    std::uint64_t cell_budget = swport::align::kDefaultTracebackCellBudget;
};

int run_align(const GlobalOpts& g, const AlignOpts& o) {
    const swport::Sequence query = load_fasta(o.query_path).front();
    const swport::Sequence database = load_fasta(o.db_path).front();
    const swport::ScoringScheme scheme = o.scoring.scheme();
    warn_scheme(scheme);
    warn_wildcards(query, scheme.alphabet());
    warn_wildcards(database, scheme.alphabet());

    if (o.kernel != "scalar" && o.kernel != "wavefront")
        throw swport::ParseError("unknown kernel \"" + o.kernel +
                                 "\" (expected scalar or wavefront)");
    if (o.traceback && o.kernel != "scalar")
        throw swport::ParseError("--traceback requires --kernel scalar");

    const auto start = std::chrono::steady_clock::now();
    swport::AlignmentResult result;
    if (o.kernel == "wavefront") {
        swport::kernels::WavefrontConfig wf;
        wf.tile_rows = o.tile_rows;
        wf.workers = o.workers;
        if (o.band >= 0)
            wf.band = static_cast<std::size_t>(o.band);
        result = swport::kernels::wavefront_score(query, database, scheme, wf);
    } else if (o.traceback) {
        result = swport::align::traceback_local(query, database, scheme, o.cell_budget);
    } else {
        result = swport::align::score_local(query, database, scheme);
    }
    const double seconds = elapsed_seconds(start);

    const std::uint64_t cells =
        static_cast<std::uint64_t>(query.length()) * database.length();
    const double gcups =
        seconds > 0.0
            ? swport::perfmodel::measured_gcups(query.length(), database.length(), seconds)
            : 0.0;

    if (g.jsonl) {
        ordered_json j;
        j["v"] = 1;
        j["type"] = "alignment";
        j["query"] = query.id;
        j["query_length"] = query.length();
        j["database"] = database.id;
        j["database_length"] = database.length();
        j["kernel"] = o.kernel;
        j["score"] = result.score;
        j["end_q"] = result.end_q;
        j["end_d"] = result.end_d;
        if (o.traceback) {
            j["start_q"] = result.start_q;
            j["start_d"] = result.start_d;
            j["cigar"] = swport::cigar(result.ops);
        }
        j["cells"] = cells;
        if (!g.no_timing) {
            j["seconds"] = seconds;
            j["gcups"] = gcups;
        }
        emit(j);
        return 0;
    }

    std::cout << "query     " << query.id << " (" << query.length() << " residues)\n"
              << "database  " << database.id << " (" << database.length()
              << " residues)\n"
              << "kernel    " << o.kernel << '\n'
              << "score     " << result.score << '\n'
              << "end       q " << result.end_q << ", d " << result.end_d << '\n';
    if (o.traceback) {
        std::cout << "start     q " << result.start_q << ", d " << result.start_d
                  << '\n'
                  << "cigar     " << swport::cigar(result.ops) << '\n';
    }
    std::cout << "cells     " << cells << '\n';
    if (!g.no_timing)
        std::cout << "time      " << std::setprecision(6) << seconds << " s\n"
                  << "gcups     " << std::setprecision(6) << gcups << '\n';
    return 0;
}

// ---- search ------------------------------------------------------------------

struct SearchOpts {
    std::string queries_path;
    std::string db_path;
    ScoringOpts scoring;
    std::size_t threshold = 2000;
    std::size_t workers = 1;
    std::string strategy = "query-split";
    std::size_t top = 10;
    std::size_t repeats = 1;
    std::size_t lane_width = 8;
    std::size_t tile_rows = 64;
};

int run_search_cmd(const GlobalOpts& g, const SearchOpts& o) {
    const auto queries = load_fasta(o.queries_path);
    const auto database = load_fasta(o.db_path);
    const swport::ScoringScheme scheme = o.scoring.scheme();
    warn_scheme(scheme);

    swport::sched::SearchConfig config;
    config.threshold = o.threshold;
    config.workers = o.workers;
    config.top_k = o.top;
    config.lane_width = o.lane_width;
    config.strategy = swport::sched::parse_strategy(o.strategy);
    config.wavefront.tile_rows = o.tile_rows;

    if (o.repeats == 0)
        throw swport::ParseError("--repeats must be at least 1");

    swport::sched::SearchOutcome outcome;
    std::vector<double> repeat_seconds;
    std::vector<double> repeat_gcups;
    for (std::size_t r = 0; r < o.repeats; ++r) {
        outcome = swport::sched::run_search(queries, database, scheme, config);
        repeat_seconds.push_back(outcome.wall_seconds);
        repeat_gcups.push_back(outcome.gcups);
    }
    double mean_gcups = 0.0;
    for (double v : repeat_gcups)
        mean_gcups += v;
    mean_gcups /= static_cast<double>(repeat_gcups.size());

    if (g.jsonl) {
        for (const auto& q : outcome.per_query) {
            ordered_json j;
            j["v"] = 1;
            j["type"] = "query";
            j["query"] = q.query_id;
            j["cells"] = q.cell_count;
            ordered_json hits = ordered_json::array();
            for (const auto& h : q.top)
                hits.push_back({{"target", h.target_id},
                                {"score", h.score},
                                {"end_q", h.end_q},
                                {"end_d", h.end_d}});
            j["hits"] = hits;
            emit(j);
        }
        ordered_json j;
        j["v"] = 1;
        j["type"] = "run";
        j["queries"] = queries.size();
        j["targets"] = database.size();
        j["strategy"] = o.strategy;
        j["workers"] = o.workers;
        j["threshold"] = o.threshold;
        j["top"] = o.top;
        j["lane_width"] = o.lane_width;
        j["repeats"] = o.repeats;
        j["total_cells"] = outcome.total_cells;
        j["kernel_cell_updates"] = outcome.kernel_cell_updates;
        if (!g.no_timing) {
            j["seconds"] = repeat_seconds;
            j["gcups"] = repeat_gcups;
            j["mean_gcups"] = mean_gcups;
        }
        emit(j);
        return 0;
    }

    std::cout << "# " << queries.size() << " queries, " << database.size()
              << " targets, strategy " << o.strategy << ", " << o.workers
              << " worker(s), threshold " << o.threshold << ", top " << o.top
              << '\n';
    for (const auto& q : outcome.per_query) {
        std::cout << "query " << q.query_id << " (" << q.cell_count << " cells)\n";
        std::size_t rank = 1;
        for (const auto& h : q.top)
            std::cout << "  " << std::setw(3) << rank++ << "  " << h.target_id
                      << "  score " << h.score << "  end q " << h.end_q << ", d "
                      << h.end_d << '\n';
    }
    if (!g.no_timing) {
        for (std::size_t r = 0; r < repeat_seconds.size(); ++r)
            std::cout << "run " << r + 1 << ": " << std::setprecision(6)
                      << repeat_seconds[r] << " s, " << repeat_gcups[r]
                      << " GCUPS\n";
        std::cout << "mean " << std::setprecision(6) << mean_gcups << " GCUPS over "
                  << o.repeats << " run(s)\n";
    }
    return 0;
}

// ---- peak --------------------------------------------------------------------

std::vector<swport::perfmodel::DeviceSpec> load_registry(const std::string& path) {
    if (path.empty())
        return swport::perfmodel::builtin_registry();
    std::ifstream in = open_or_throw(path);
    return swport::perfmodel::parse_device_registry(in);
}

int run_peak(const GlobalOpts& g, const std::string& registry_path,
             const std::string& device) {
    std::vector<swport::perfmodel::DeviceSpec> devices = load_registry(registry_path);
    if (!device.empty()) {
        const swport::perfmodel::DeviceSpec* found =
            swport::perfmodel::find_device(devices, device);
        if (!found)
            throw swport::ParseError("no device matches \"" + device + '"');
        devices = {*found};
    }
    for (const auto& d : devices) {
        const double ops = swport::perfmodel::capability(d);
        const double peak = swport::perfmodel::theoretical_peak_gcups(d);
        if (g.jsonl) {
            ordered_json j;
            j["v"] = 1;
            j["type"] = "peak";
            j["vendor"] = d.vendor;
            j["model"] = d.model;
            j["kind"] = swport::perfmodel::device_kind_name(d.kind);
            j["segment"] = d.segment;
            j["capability_ops"] = ops;
            j["peak_gcups"] = peak;
            emit(j);
        } else {
            std::ostringstream row;
            row << std::left << std::setw(7) << d.vendor << std::setw(19) << d.model
                << std::setw(6) << swport::perfmodel::device_kind_name(d.kind)
                << std::setw(9) << d.segment << std::right << std::fixed
                << std::setprecision(1) << std::setw(7) << peak;
            std::cout << row.str() << '\n';
        }
    }
    return 0;
}

// ---- pp ----------------------------------------------------------------------

struct PpOpts {
    std::string log_path;
    std::string app = "protein-search";
    std::vector<std::string> impls;
    std::vector<std::string> sets;
};

swport::portability::PlatformSet parse_set(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw swport::ParseError("bad platform set \"" + text +
                                 "\" (want name:platform1,platform2,...)");
    swport::portability::PlatformSet set;
    set.name = text.substr(0, colon);
    std::istringstream rest(text.substr(colon + 1));
    std::string platform;
    while (std::getline(rest, platform, ','))
        if (!platform.empty())
            set.platforms.push_back(platform);
    return set;
}

int run_pp(const GlobalOpts& g, const PpOpts& o) {
    std::ifstream in = open_or_throw(o.log_path);
    const auto records = swport::portability::parse_measurement_log(in);
    for (const std::string& w : swport::portability::efficiency_warnings(records))
        warn(w);

    std::vector<std::string> impls = o.impls;
    if (impls.empty())
        for (const auto& r : records)
            if (std::find(impls.begin(), impls.end(), r.implementation) == impls.end())
                impls.push_back(r.implementation);

    std::vector<swport::portability::EfficiencyRecord> app_records;
    for (const auto& r : records)
        if (r.app == o.app)
            app_records.push_back(r);
    if (app_records.empty())
        throw swport::NoRecords("no measurements for app \"" + o.app + '"');

    std::vector<swport::portability::PpEntry> entries;
    std::vector<std::vector<std::string>> set_platforms;
    for (const std::string& text : o.sets) {
        const auto set = parse_set(text);
        for (const std::string& impl : impls) {
            const auto impl_records =
                swport::portability::filter_records(records, o.app, impl);
            entries.push_back(
                {set.name, impl, swport::portability::pp_bar(impl_records, set)});
            set_platforms.push_back(set.platforms);
        }
    }

    if (g.jsonl) {
        for (const auto& r : app_records) {
            if (std::find(impls.begin(), impls.end(), r.implementation) == impls.end())
                continue;
            ordered_json j;
            j["v"] = 1;
            j["type"] = "efficiency";
            j["platform"] = r.platform;
            j["app"] = r.app;
            j["implementation"] = r.implementation;
            j["supported"] = r.supported;
            if (r.supported) {
                j["achieved_gcups"] = r.achieved_gcups;
                j["peak_gcups"] = r.peak_gcups;
                j["efficiency"] = swport::portability::arch_efficiency(r);
            }
            emit(j);
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            ordered_json j;
            j["v"] = 1;
            j["type"] = "pp";
            j["app"] = o.app;
            j["set"] = entries[i].set_name;
            j["implementation"] = entries[i].implementation;
            j["platforms"] = set_platforms[i];
            if (entries[i].value)
                j["pp"] = *entries[i].value;
            else
                j["pp"] = nullptr;
            emit(j);
        }
        return 0;
    }

    std::cout << swport::portability::render_efficiency_table(app_records, impls);
    if (!entries.empty())
        std::cout << '\n' << swport::portability::render_pp_table(entries);
    return 0;
}

// ---- simulate ------------------------------------------------------------------

struct SimulateOpts {
    std::string workers;
    std::string queries;
    std::string strategy = "capability-aware";
};

std::vector<swport::sched::WorkerSpec> parse_worker_list(const std::string& text) {
    std::vector<swport::sched::WorkerSpec> out;
    std::istringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        if (part.empty())
            continue;
        swport::sched::WorkerSpec spec;
        const auto colon = part.find(':');
        std::string rate = part;
        if (colon != std::string::npos) {
            spec.id = part.substr(0, colon);
            rate = part.substr(colon + 1);
        } else {
            spec.id = "w" + std::to_string(out.size());
        }
        try {
            spec.peak_gcups = std::stod(rate);
        } catch (const std::exception&) {
            throw swport::ParseError("bad worker \"" + part + "\" (want id:peak_gcups)");
        }
        out.push_back(spec);
    }
    return out;
}

// "5000x3,1200" -> {5000, 5000, 5000, 1200}
std::vector<std::uint64_t> parse_cell_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::istringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        if (part.empty())
            continue;
        const auto x = part.find('x');
        try {
            const std::uint64_t cells = std::stoull(part.substr(0, x));
            const std::uint64_t repeat =
                x == std::string::npos ? 1 : std::stoull(part.substr(x + 1));
            for (std::uint64_t i = 0; i < repeat; ++i)
                out.push_back(cells);
        } catch (const swport::Error&) {
            throw;
        } catch (const std::exception&) {
            throw swport::ParseError("bad cell count \"" + part +
                                     "\" (want cells or cellsxN)");
        }
    }
    return out;
}

int run_simulate(const GlobalOpts& g, const SimulateOpts& o) {
    const auto workers = parse_worker_list(o.workers);
    const auto cells = parse_cell_list(o.queries);
    std::vector<swport::sched::SearchTask> tasks;
    for (std::size_t i = 0; i < cells.size(); ++i)
        tasks.push_back({i, 0, 1, cells[i]});

    const auto strategy = swport::sched::parse_strategy(o.strategy);
    const auto assignment = swport::sched::distribute_tasks(tasks, workers, strategy);
    const auto estimate = swport::sched::estimate_makespan(assignment, workers);

    if (g.jsonl) {
        ordered_json j;
        j["v"] = 1;
        j["type"] = "estimate";
        j["strategy"] = o.strategy;
        j["tasks"] = tasks.size();
        j["total_cells"] = assignment.total_cells();
        ordered_json rows = ordered_json::array();
        for (std::size_t w = 0; w < workers.size(); ++w)
            rows.push_back({{"id", workers[w].id},
                            {"peak_gcups", workers[w].peak_gcups},
                            {"tasks", assignment.per_worker[w].size()},
                            {"cells", assignment.worker_cells(w)},
                            {"seconds", estimate.worker_seconds[w]}});
        j["workers"] = rows;
        j["makespan_seconds"] = estimate.makespan;
        j["mean_seconds"] = estimate.mean_seconds;
        j["imbalance"] = estimate.imbalance;
        emit(j);
        return 0;
    }

    std::cout << "strategy   " << o.strategy << '\n'
              << "tasks      " << tasks.size() << " (" << assignment.total_cells()
              << " cells)\n";
    for (std::size_t w = 0; w < workers.size(); ++w)
        std::cout << "worker " << workers[w].id << "  " << std::setprecision(6)
                  << workers[w].peak_gcups << " GCUPS  "
                  << assignment.per_worker[w].size() << " task(s)  "
                  << assignment.worker_cells(w) << " cells  "
                  << estimate.worker_seconds[w] << " s\n";
    std::cout << "makespan   " << std::setprecision(6) << estimate.makespan << " s\n"
              << "mean       " << estimate.mean_seconds << " s\n"
              << "imbalance  " << std::setprecision(4) << estimate.imbalance << '\n';
    return 0;
}

// ---- bench ---------------------------------------------------------------------

struct BenchOpts {
    std::string kernel = "all";
    std::size_t query_len = 256;
    std::size_t target_len = 256;
    std::size_t targets = 64;
    std::size_t repeats = 3;
    std::uint32_t seed = 42;
    bool protein = false;
    double peak = 0.0;
    std::string device;
    std::string registry_path;
    std::size_t lane_width = 8;
    std::size_t tile_rows = 64;
    std::size_t workers = 1;
    CLI::Option* peak_opt = nullptr;
};

swport::Sequence random_sequence(std::mt19937& rng, const std::string& symbols,
                                 std::size_t len, const std::string& id) {
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    swport::Sequence s{id, {}};
    s.residues.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.residues.push_back(symbols[pick(rng)]);
    return s;
}

int run_bench(const GlobalOpts& g, const BenchOpts& o) {
    const bool peak_given = o.peak_opt != nullptr && o.peak_opt->count() > 0;
    const bool device_given = !o.device.empty();
    if (peak_given == device_given)
        throw swport::ParseError("need exactly one of --peak or --device");

    std::string platform = "local";
    double peak = o.peak;
    if (!o.device.empty()) {
        const auto devices = load_registry(o.registry_path);
        const auto* found = swport::perfmodel::find_device(devices, o.device);
        if (!found)
            throw swport::ParseError("no device matches \"" + o.device + '"');
        platform = found->model;
        peak = swport::perfmodel::theoretical_peak_gcups(*found);
    }

    const swport::ScoringScheme scheme =
        o.protein ? swport::io::blosum62_scheme() : swport::dna_scheme();
    const std::string symbols = o.protein ? "ARNDCQEGHILKMFPSTWYV" : "ACGT";
    const std::string app = o.protein ? "bench-protein" : "bench-dna";

    std::mt19937 rng(o.seed);
    const swport::Sequence query = random_sequence(rng, symbols, o.query_len, "q");
    const swport::Sequence pair_target =
        random_sequence(rng, symbols, o.target_len, "d");
    std::vector<swport::Sequence> batch_targets;
    for (std::size_t i = 0; i < o.targets; ++i)
        batch_targets.push_back(
            random_sequence(rng, symbols, o.target_len, "t" + std::to_string(i)));

    std::vector<std::string> kernels;
    if (o.kernel == "all")
        kernels = {"scalar", "batch", "wavefront"};
    else if (o.kernel == "scalar" || o.kernel == "batch" || o.kernel == "wavefront")
        kernels = {o.kernel};
    else
        throw swport::ParseError("unknown kernel \"" + o.kernel +
                                 "\" (expected scalar, batch, wavefront or all)");
    if (o.repeats == 0)
        throw swport::ParseError("--repeats must be at least 1");

    std::vector<swport::portability::EfficiencyRecord> rows;
    std::vector<ordered_json> machine_rows;
    for (const std::string& kernel : kernels) {
        const std::uint64_t cells =
            kernel == "batch"
                ? static_cast<std::uint64_t>(o.query_len) * o.target_len * o.targets
                : static_cast<std::uint64_t>(o.query_len) * o.target_len;
        std::vector<double> seconds;
        for (std::size_t r = 0; r < o.repeats; ++r) {
            const auto start = std::chrono::steady_clock::now();
            if (kernel == "scalar") {
                swport::align::score_local(query, pair_target, scheme);
            } else if (kernel == "batch") {
                swport::kernels::SequenceBatch batch(query, batch_targets, o.lane_width);
                swport::kernels::batch_score(batch, scheme, o.workers);
            } else {
                swport::kernels::WavefrontConfig wf;
                wf.tile_rows = o.tile_rows;
                wf.workers = o.workers;
                swport::kernels::wavefront_score(query, pair_target, scheme, wf);
            }
            seconds.push_back(elapsed_seconds(start));
        }
        double mean_gcups = 0.0;
        for (double s : seconds)
            mean_gcups += static_cast<double>(cells) / (s * 1e9);
        mean_gcups /= static_cast<double>(seconds.size());

        swport::portability::EfficiencyRecord record;
        record.platform = platform;
        record.app = app;
        record.implementation = kernel;
        record.achieved_gcups = mean_gcups;
        record.peak_gcups = peak;
        rows.push_back(record);

        ordered_json j;
        j["v"] = 1;
        j["type"] = "bench";
        j["platform"] = platform;
        j["app"] = app;
        j["implementation"] = kernel;
        j["cells"] = cells;
        j["repeats"] = o.repeats;
        j["seconds"] = seconds;
        j["achieved_gcups"] = mean_gcups;
        j["peak_gcups"] = peak;
        j["efficiency"] = swport::portability::arch_efficiency(record);
        machine_rows.push_back(j);
    }

    if (g.jsonl) {
        for (const auto& j : machine_rows)
            emit(j);
        return 0;
    }
    std::cout << "# " << app << ", query " << o.query_len << " x target "
              << o.target_len << " (batch: " << o.targets << " targets), "
              << o.repeats << " repeat(s)\n"
              << swport::portability::render_efficiency_table(rows, kernels);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine-gap local alignment: kernels, search harness, "
                 "device peak model and portability metrics"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_flag("--jsonl", global.jsonl,
                 "line-delimited JSON records on stdout (schema field v=1)");
    app.add_flag("--no-timing", global.no_timing,
                 "omit wall-clock fields so output is reproducible byte for byte");

    int rc = 0;

    auto align_opts = std::make_shared<AlignOpts>();
    CLI::App* align = app.add_subcommand(
        "align", "align the first sequence of one FASTA file against another");
    align->fallthrough();  // global flags may follow the subcommand
    align->add_option("query", align_opts->query_path, "query FASTA file")
        ->required();
    align->add_option("database", align_opts->db_path, "database FASTA file")
        ->required();
    align_opts->scoring.attach(align);
    align->add_flag("--traceback", align_opts->traceback,
                    "also report start coordinates and the edit transcript");
    align->add_option("--kernel", align_opts->kernel, "scalar or wavefront")
        ->capture_default_str();
    align->add_option("--tile-rows", align_opts->tile_rows,
                      "wavefront strip height in query rows")
        ->capture_default_str();
    align->add_option("--band", align_opts->band,
                      "wavefront band half-width (cells with |i-j| > band are skipped)");
    align->add_option("--workers", align_opts->workers, "wavefront worker threads")
        ->capture_default_str();
    align->add_option("--cell-budget", align_opts->cell_budget,
                      "largest query x database cell product --traceback will hold");
    align->callback([&rc, &global, align_opts] { rc = run_align(global, *align_opts); });

    auto search_opts = std::make_shared<SearchOpts>();
    CLI::App* search = app.add_subcommand(
        "search", "score every query against a sequence database, keep the best hits");
    search->fallthrough();
    search->add_option("queries", search_opts->queries_path, "query FASTA file")
        ->required();
    search->add_option("database", search_opts->db_path, "database FASTA file")
        ->required();
    search_opts->scoring.attach(search);
    search->add_option("--threshold", search_opts->threshold,
                       "length cutoff between the lane batch and wavefront kernels")
        ->capture_default_str();
    search->add_option("--workers", search_opts->workers, "host threads")
        ->capture_default_str();
    search->add_option("--strategy", search_opts->strategy,
                       "query-split, db-split, capability-aware or work-stealing")
        ->capture_default_str();
    search->add_option("--top", search_opts->top, "hits kept per query")
        ->capture_default_str();
    search->add_option("--repeats", search_opts->repeats,
                       "timed repetitions (results are identical, timing is not)")
        ->capture_default_str();
    search->add_option("--lane-width", search_opts->lane_width,
                       "batch kernel lanes per group")
        ->capture_default_str();
    search->add_option("--tile-rows", search_opts->tile_rows,
                       "wavefront strip height in query rows")
        ->capture_default_str();
    search->callback(
        [&rc, &global, search_opts] { rc = run_search_cmd(global, *search_opts); });

    auto peak_registry = std::make_shared<std::string>();
    auto peak_device = std::make_shared<std::string>();
    CLI::App* peak = app.add_subcommand(
        "peak", "theoretical peak alignment throughput of the known devices");
    peak->fallthrough();
    peak->add_option("--registry", *peak_registry,
                     "device registry file (default: the embedded registry)");
    peak->add_option("--device", *peak_device,
                     "single device to report (exact or unique substring match)");
    peak->callback([&rc, &global, peak_registry, peak_device] {
        rc = run_peak(global, *peak_registry, *peak_device);
    });

    auto pp_opts = std::make_shared<PpOpts>();
    CLI::App* pp = app.add_subcommand(
        "pp", "architectural efficiency and performance portability from a measurement log");
    pp->fallthrough();
    pp->add_option("--log", pp_opts->log_path, "measurement log file")->required();
    pp->add_option("--app", pp_opts->app, "application column to analyse")
        ->capture_default_str();
    pp->add_option("--impl", pp_opts->impls,
                   "implementation(s) to include (default: all in the log)");
    pp->add_option("--set", pp_opts->sets,
                   "platform set as name:platform1,platform2,... (repeatable)");
    pp->callback([&rc, &global, pp_opts] { rc = run_pp(global, *pp_opts); });

    auto sim_opts = std::make_shared<SimulateOpts>();
    CLI::App* simulate = app.add_subcommand(
        "simulate", "estimate makespan and imbalance of a distribution strategy");
    simulate->fallthrough();
    simulate
        ->add_option("--workers", sim_opts->workers,
                     "worker list as id:peak_gcups[,...] (ids optional)")
        ->required();
    simulate
        ->add_option("--queries", sim_opts->queries,
                     "per-query cell counts, e.g. 5000x3,1200")
        ->required();
    simulate->add_option("--strategy", sim_opts->strategy, "distribution strategy")
        ->capture_default_str();
    simulate->callback([&rc, &global, sim_opts] { rc = run_simulate(global, *sim_opts); });

    auto bench_opts = std::make_shared<BenchOpts>();
    CLI::App* bench = app.add_subcommand(
        "bench", "measure this machine's alignment throughput against a model peak");
    bench->fallthrough();
    bench->add_option("--kernel", bench_opts->kernel,
                      "scalar, batch, wavefront or all")
        ->capture_default_str();
    bench->add_option("--query-len", bench_opts->query_len, "query length")
        ->capture_default_str();
    bench->add_option("--target-len", bench_opts->target_len, "target length")
        ->capture_default_str();
    bench->add_option("--targets", bench_opts->targets, "batch kernel target count")
        ->capture_default_str();
    bench->add_option("--repeats", bench_opts->repeats, "timed repetitions")
        ->capture_default_str();
    bench->add_option("--seed", bench_opts->seed, "sequence generator seed")
        ->capture_default_str();
    bench->add_flag("--protein", bench_opts->protein,
                    "protein residues and the embedded BLOSUM62 scheme (default: DNA)");
    bench_opts->peak_opt = bench->add_option(
        "--peak", bench_opts->peak, "reference peak GCUPS for the efficiency column");
    bench->add_option("--device", bench_opts->device,
                      "look the reference peak up in the device registry");
    bench->add_option("--registry", bench_opts->registry_path,
                      "device registry file (default: the embedded registry)");
    bench->add_option("--lane-width", bench_opts->lane_width, "batch kernel lanes")
        ->capture_default_str();
    bench->add_option("--tile-rows", bench_opts->tile_rows,
                      "wavefront strip height in query rows")
        ->capture_default_str();
    bench->add_option("--workers", bench_opts->workers,
                      "threads inside the batch and wavefront kernels")
        ->capture_default_str();
    bench->callback([&rc, &global, bench_opts] { rc = run_bench(global, *bench_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const swport::Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
