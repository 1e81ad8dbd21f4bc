#include "swport/wavefront.hpp"

#include <barrier>
#include <thread>
#include <vector>

namespace swport::kernels {

namespace {

// Sentinel stored in skipped (out-of-band) cells.  Any path through such a
// cell loses by a wide margin, yet two gap subtractions cannot wrap.
constexpr std::int32_t kOutOfBand = kNegInf / 2;

// Shared state of one wavefront call.  Cells are addressed by strip-local row
// r in [1, strip_rows] and column j in [1, n]; anti-diagonal t holds the cells
// with r + j == t.  Only three diagonals of state are live at a time, plus
// the horizontal H/F rows that carry results from one strip into the next.
struct Sweep {
    const std::vector<std::uint8_t>& q;
    const std::vector<std::uint8_t>& d;
    const ScoreMatrix& mat;
    std::int32_t go, ge;
    std::optional<std::size_t> band;

    std::size_t n;            // database length (columns)
    std::size_t strip_first;  // 1-based query row where the current strip starts
    std::size_t strip_rows;   // rows in the current strip

    // Wavefront state, indexed by strip-local r.
    std::vector<std::int32_t> h_cur, h_prev, h_prev2;
    std::vector<std::int32_t> e_cur, e_prev;
    std::vector<std::int32_t> f_cur, f_prev;

    // Row of H/F handed down from the strip above (index j, 0 = boundary),
    // and the collectors for the current strip's bottom row.
    std::vector<std::int32_t> h_above, f_above;
    std::vector<std::int32_t> h_bottom, f_bottom;

    std::int32_t best = 0;
    std::size_t best_i = 0, best_j = 0;
    std::uint64_t cells = 0;

    Sweep(const std::vector<std::uint8_t>& q_, const std::vector<std::uint8_t>& d_,
          const ScoringScheme& scheme, std::optional<std::size_t> band_,
          std::size_t max_rows)
        : q(q_), d(d_), mat(scheme.matrix), go(scheme.gap_open),
          ge(scheme.gap_extend), band(band_), n(d_.size()) {
        h_cur.assign(max_rows + 1, 0);
        h_prev.assign(max_rows + 1, 0);
        h_prev2.assign(max_rows + 1, 0);
        e_cur.assign(max_rows + 1, 0);
        e_prev.assign(max_rows + 1, 0);
        f_cur.assign(max_rows + 1, 0);
        f_prev.assign(max_rows + 1, 0);
        h_above.assign(n + 1, 0);
        f_above.assign(n + 1, 0);
        h_bottom.assign(n + 1, 0);
        f_bottom.assign(n + 1, 0);
    }

    bool in_band(std::size_t i, std::size_t j) const {
        if (!band)
            return true;
        const std::size_t lo = std::min(i, j), hi = std::max(i, j);
        return hi - lo <= *band;
    }

    void compute_cell(std::size_t r, std::size_t t) {
        const std::size_t j = t - r;
        const std::size_t i = strip_first + r - 1;
        if (!in_band(i, j)) {
            h_cur[r] = kOutOfBand;
            e_cur[r] = kOutOfBand;
            f_cur[r] = kOutOfBand;
            if (r == strip_rows) {
                h_bottom[j] = kOutOfBand;
                f_bottom[j] = kOutOfBand;
            }
            return;
        }
        const std::int32_t up_h = (r == 1) ? h_above[j] : h_prev[r - 1];
        const std::int32_t up_f = (r == 1) ? f_above[j] : f_prev[r - 1];
        const std::int32_t left_h = (j == 1) ? 0 : h_prev[r];
        const std::int32_t left_e = (j == 1) ? 0 : e_prev[r];
        const std::int32_t diag =
            (r == 1) ? h_above[j - 1] : ((j == 1) ? 0 : h_prev2[r - 1]);

        const std::int32_t e = std::max(left_e - ge, left_h - go);
        const std::int32_t f = std::max(up_f - ge, up_h - go);
        std::int32_t h = diag + mat.at(q[i - 1], d[j - 1]);
        h = std::max(h, e);
        h = std::max(h, f);
        h = std::max(h, 0);

        h_cur[r] = h;
        e_cur[r] = e;
        f_cur[r] = f;
        if (r == strip_rows) {
            h_bottom[j] = h;
            f_bottom[j] = f;
        }
    }

    // Sequential epilogue of one anti-diagonal: fold the fresh cells into the
    // running maximum (explicit lexicographic tie-break keeps the result
    // independent of the schedule) and rotate the diagonal buffers.
    void finish_diagonal(std::size_t t, std::size_t r_lo, std::size_t r_hi) {
        std::uint64_t computed = 0;
        for (std::size_t r = r_lo; r <= r_hi; ++r) {
            const std::int32_t h = h_cur[r];
            computed += (h != kOutOfBand);
            if (h <= 0 || h < best)
                continue;
            const std::size_t i = strip_first + r - 1;
            const std::size_t j = t - r;
            if (h > best || i < best_i || (i == best_i && j < best_j)) {
                best = h;
                best_i = i;
                best_j = j;
            }
        }
        cells += computed;
        h_prev2.swap(h_prev);
        h_prev.swap(h_cur);
        e_prev.swap(e_cur);
        f_prev.swap(f_cur);
    }

    void finish_strip() {
        h_above.swap(h_bottom);
        f_above.swap(f_bottom);
    }
};

void run_strip_sequential(Sweep& sweep) {
    const std::size_t rows = sweep.strip_rows;
    for (std::size_t t = 2; t <= rows + sweep.n; ++t) {
        const std::size_t r_lo = (t > sweep.n) ? t - sweep.n : 1;
        const std::size_t r_hi = std::min(rows, t - 1);
        for (std::size_t r = r_lo; r <= r_hi; ++r)
            sweep.compute_cell(r, t);
        sweep.finish_diagonal(t, r_lo, r_hi);
    }
    sweep.finish_strip();
}

// SPMD strip: every worker walks the same diagonal schedule and computes its
// own slice; the barrier's completion step runs the sequential epilogue once
// per diagonal, so all workers observe rotated buffers on the next round.
void run_strip_parallel(Sweep& sweep, std::size_t workers) {
    const std::size_t rows = sweep.strip_rows;
    const std::size_t t_last = rows + sweep.n;
    std::size_t t_shared = 2;

    auto on_complete = [&sweep, &t_shared, rows]() noexcept {
        const std::size_t t = t_shared;
        const std::size_t r_lo = (t > sweep.n) ? t - sweep.n : 1;
        const std::size_t r_hi = std::min(rows, t - 1);
        sweep.finish_diagonal(t, r_lo, r_hi);
        ++t_shared;
    };
    std::barrier sync(static_cast<std::ptrdiff_t>(workers), on_complete);

    auto worker = [&](std::size_t w) {
        for (std::size_t t = 2; t <= t_last; ++t) {
            const std::size_t r_lo = (t > sweep.n) ? t - sweep.n : 1;
            const std::size_t r_hi = std::min(rows, t - 1);
            const std::size_t len = r_hi - r_lo + 1;
            const std::size_t chunk = (len + workers - 1) / workers;
            const std::size_t begin = r_lo + w * chunk;
            const std::size_t end = std::min(r_hi + 1, begin + chunk);
            for (std::size_t r = begin; r < end; ++r)
                sweep.compute_cell(r, t);
            sync.arrive_and_wait();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(worker, w);
    worker(0);
    for (auto& th : pool)
        th.join();
    sweep.finish_strip();
}

} // namespace

AlignmentResult wavefront_score(const Sequence& query, const Sequence& database,
                                const ScoringScheme& scheme,
                                const WavefrontConfig& config, KernelStats* stats) {
    scheme.validate();
    if (config.tile_rows == 0)
        throw ParseError("wavefront tile_rows must be at least 1");

    const EncodedSequence q = encode(query.residues, scheme.alphabet());
    const EncodedSequence d = encode(database.residues, scheme.alphabet());
    const std::size_t m = q.codes.size();
    const std::size_t workers = std::max<std::size_t>(1, config.workers);

    Sweep sweep(q.codes, d.codes, scheme, config.band,
                std::min(config.tile_rows, m));

    for (std::size_t first = 1; first <= m; first += config.tile_rows) {
        sweep.strip_first = first;
        sweep.strip_rows = std::min(config.tile_rows, m - first + 1);
        // Fan out only when the widest diagonal of this strip gives every
        // worker a worthwhile slice.
        const std::size_t widest = std::min(sweep.strip_rows, sweep.n);
        if (workers > 1 && widest >= config.min_parallel_cells * workers)
            run_strip_parallel(sweep, workers);
        else
            run_strip_sequential(sweep);
    }

    if (stats)
        stats->cell_updates += sweep.cells;

    AlignmentResult out;
    out.score = sweep.best;
    out.end_q = sweep.best_i;
    out.end_d = sweep.best_j;
    return out;
}

} // namespace swport::kernels
