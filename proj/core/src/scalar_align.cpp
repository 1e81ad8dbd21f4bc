#include "swport/scalar_align.hpp"

#include <vector>

namespace swport::align {

namespace {

// Row-major sweep with one row of state.  `rows`/`cols` are encoded residues;
// `sm(r, c)` must return the substitution score for (row residue, col residue).
// `to_qd` maps a (row, col) cell to (query, database) coordinates so the
// caller can run the sweep in either orientation and still break score ties
// towards the lexicographically smallest (query, database) cell.
template <typename Lookup>
AlignmentResult sweep(const std::vector<std::uint8_t>& rows,
                      const std::vector<std::uint8_t>& cols, Lookup sm,
                      bool swapped, std::int32_t go, std::int32_t ge) {
    const std::size_t C = cols.size();
    std::vector<std::int32_t> h_up(C + 1, 0);  // H of the previous row
    std::vector<std::int32_t> f_up(C + 1, 0);  // F of the previous row

    std::int32_t best = 0;
    std::size_t best_q = 0, best_d = 0;

    for (std::size_t i = 1; i <= rows.size(); ++i) {
        std::int32_t diag = h_up[0];  // H(i-1, j-1), starts at the boundary 0
        std::int32_t h_left = 0;      // H(i, 0)
        std::int32_t e_left = 0;      // E(i, 0)
        const std::uint8_t r = rows[i - 1];
        for (std::size_t j = 1; j <= C; ++j) {
            const std::int32_t e = std::max(e_left - ge, h_left - go);
            const std::int32_t f = std::max(f_up[j] - ge, h_up[j] - go);
            std::int32_t h = diag + sm(r, cols[j - 1]);
            h = std::max(h, e);
            h = std::max(h, f);
            h = std::max(h, 0);

            diag = h_up[j];
            h_up[j] = h;
            f_up[j] = f;
            h_left = h;
            e_left = e;

            if (h >= best && h > 0) {
                const std::size_t q = swapped ? j : i;
                const std::size_t d = swapped ? i : j;
                if (h > best || q < best_q || (q == best_q && d < best_d)) {
                    best = h;
                    best_q = q;
                    best_d = d;
                }
            }
        }
    }

    AlignmentResult out;
    out.score = best;
    out.end_q = best_q;
    out.end_d = best_d;
    return out;
}

} // namespace

AlignmentResult score_local(const Sequence& query, const Sequence& database,
                            const ScoringScheme& scheme) {
    scheme.validate();
    const EncodedSequence q = encode(query.residues, scheme.alphabet());
    const EncodedSequence d = encode(database.residues, scheme.alphabet());
    const ScoreMatrix& m = scheme.matrix;

    if (d.codes.size() <= q.codes.size()) {
        return sweep(
            q.codes, d.codes,
            [&m](std::uint8_t a, std::uint8_t b) { return m.at(a, b); },
            /*swapped=*/false, scheme.gap_open, scheme.gap_extend);
    }
    // Database longer: sweep the transposed matrix so the state row spans the
    // shorter sequence.  Substitution lookups keep their (query, database)
    // argument order, so asymmetric matrices are handled correctly.
    return sweep(
        d.codes, q.codes,
        [&m](std::uint8_t a, std::uint8_t b) { return m.at(b, a); },
        /*swapped=*/true, scheme.gap_open, scheme.gap_extend);
}

namespace {

// Direction codes packed into one byte per cell.
enum HSrc : std::uint8_t { kStop = 0, kDiag = 1, kVert = 2, kHoriz = 3 };
constexpr std::uint8_t kEExtend = 1u << 2;  // E came from E (extend), else from H
constexpr std::uint8_t kFExtend = 1u << 3;  // F came from F (extend), else from H

} // namespace

AlignmentResult traceback_local(const Sequence& query, const Sequence& database,
                                const ScoringScheme& scheme,
                                std::uint64_t cell_budget) {
    scheme.validate();
    const EncodedSequence q = encode(query.residues, scheme.alphabet());
    const EncodedSequence d = encode(database.residues, scheme.alphabet());
    const std::size_t m = q.codes.size();
    const std::size_t n = d.codes.size();

    const std::uint64_t cells = static_cast<std::uint64_t>(m) * n;
    if (cells > cell_budget)
        throw MatrixTooLarge("traceback needs " + std::to_string(cells) +
                             " cells, budget is " + std::to_string(cell_budget) +
                             " (raise the budget or use the score-only path)");

    const std::int32_t go = scheme.gap_open;
    const std::int32_t ge = scheme.gap_extend;
    const ScoreMatrix& mat = scheme.matrix;

    const std::size_t stride = n + 1;
    std::vector<std::uint8_t> dirs((m + 1) * stride, kStop);
    std::vector<std::int32_t> h_up(n + 1, 0);
    std::vector<std::int32_t> f_up(n + 1, 0);

    std::int32_t best = 0;
    std::size_t best_i = 0, best_j = 0;

    for (std::size_t i = 1; i <= m; ++i) {
        std::int32_t diag = h_up[0];
        std::int32_t h_left = 0;
        std::int32_t e_left = 0;
        const std::int32_t* srow = mat.row(q.codes[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            std::uint8_t code = 0;

            const std::int32_t e_open = h_left - go;
            const std::int32_t e_ext = e_left - ge;
            const std::int32_t e = std::max(e_open, e_ext);
            if (e_ext > e_open)
                code |= kEExtend;

            const std::int32_t f_open = h_up[j] - go;
            const std::int32_t f_ext = f_up[j] - ge;
            const std::int32_t f = std::max(f_open, f_ext);
            if (f_ext > f_open)
                code |= kFExtend;

            // Source priority on ties: diagonal, then vertical, then horizontal.
            std::int32_t h = diag + srow[d.codes[j - 1]];
            std::uint8_t src = kDiag;
            if (f > h) {
                h = f;
                src = kVert;
            }
            if (e > h) {
                h = e;
                src = kHoriz;
            }
            if (h <= 0) {
                h = 0;
                src = kStop;
            }
            dirs[i * stride + j] = code | src;

            diag = h_up[j];
            h_up[j] = h;
            f_up[j] = f;
            h_left = h;
            e_left = e;

            if (h > best || (h == best && h > 0 &&
                             (i < best_i || (i == best_i && j < best_j)))) {
                best = h;
                best_i = i;
                best_j = j;
            }
        }
    }

    AlignmentResult out;
    out.score = best;
    out.end_q = best_i;
    out.end_d = best_j;
    if (best == 0)
        return out;

    // Walk the direction codes back from the maximum cell.
    enum class State { H, E, F };
    State state = State::H;
    std::size_t i = best_i, j = best_j;
    std::vector<EditOp> rev;
    while (true) {
        const std::uint8_t code = dirs[i * stride + j];
        if (state == State::H) {
            const std::uint8_t src = code & 0x3;
            if (src == kStop)
                break;
            if (src == kDiag) {
                rev.push_back(q.codes[i - 1] == d.codes[j - 1] ? EditOp::Match
                                                               : EditOp::Mismatch);
                --i;
                --j;
            } else {
                state = (src == kVert) ? State::F : State::E;
            }
        } else if (state == State::F) {
            rev.push_back(EditOp::GapInDatabase);
            state = (code & kFExtend) ? State::F : State::H;
            --i;
        } else {
            rev.push_back(EditOp::GapInQuery);
            state = (code & kEExtend) ? State::E : State::H;
            --j;
        }
        if (i == 0 || j == 0) {
            // Hit the zeroed boundary; the alignment starts just inside it.
            break;
        }
    }

    out.start_q = i + 1;
    out.start_d = j + 1;
    out.ops.assign(rev.rbegin(), rev.rend());
    return out;
}

} // namespace swport::align
