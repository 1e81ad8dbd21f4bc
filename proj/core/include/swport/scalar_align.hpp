#pragma once

#include <algorithm>
#include <cstdint>

#include "swport/alignment.hpp"

namespace swport::align {

// Cost of one cell of the local-alignment recurrence on the abstract device
// model: 5 add/sub, 6 max and 1 auxiliary move, all on 32-bit integers.  Every
// kernel in this library runs this exact update, and the performance model
// divides device capability by this constant to obtain its theoretical peak.
inline constexpr unsigned kInstructionsPerCellUpdate = 12;

// Largest query*database product (in cells) the traceback entry point will
// materialise by default; one direction byte per cell.
inline constexpr std::uint64_t kDefaultTracebackCellBudget = 1ull << 28;

struct CellUpdate {
    CellState cell;
    std::int32_t running_max;
};

// One cell of the affine-gap local recurrence.
//
//   E = max(left.e - gap_extend, left.h - gap_open)
//   F = max(up.f   - gap_extend, up.h   - gap_open)
//   H = max(0, up_left_h + sub_score, E, F)
//
// Pure function of its inputs; boundary conventions (zeroed first row and
// column) live in the callers.  Returns the new cell and the updated running
// maximum of H, which is the local alignment score once the sweep finishes.
inline CellUpdate cell_update(std::int32_t up_left_h, const CellState& up,
                              const CellState& left, std::int32_t sub_score,
                              std::int32_t gap_open, std::int32_t gap_extend,
                              std::int32_t running_max) noexcept {
    const std::int32_t e = std::max(left.e - gap_extend, left.h - gap_open);
    const std::int32_t f = std::max(up.f - gap_extend, up.h - gap_open);
    std::int32_t h = up_left_h + sub_score;
    h = std::max(h, e);
    h = std::max(h, f);
    h = std::max(h, 0);
    return {CellState{h, e, f}, std::max(running_max, h)};
}

inline CellUpdate cell_update(std::int32_t up_left_h, const CellState& up,
                              const CellState& left, std::int32_t sub_score,
                              const ScoringScheme& scheme,
                              std::int32_t running_max) noexcept {
    return cell_update(up_left_h, up, left, sub_score, scheme.gap_open,
                       scheme.gap_extend, running_max);
}

// Local alignment score of query vs database.  Keeps one row of state over
// the shorter sequence, so memory is linear in min(|query|, |database|).
// The reported end coordinates are 1-based and belong to the first maximum
// cell in row-major (query-major) order; score 0 reports (0,0).
AlignmentResult score_local(const Sequence& query, const Sequence& database,
                            const ScoringScheme& scheme);

// Like score_local but materialises direction codes (one byte per cell) and
// walks them back from the maximum cell, so it also fills start coordinates
// and the edit transcript.  Ties inside a cell prefer the diagonal source,
// then the vertical one (gap in database), then the horizontal one (gap in
// query).  Throws MatrixTooLarge when |query|*|database| exceeds the budget.
AlignmentResult traceback_local(const Sequence& query, const Sequence& database,
                                const ScoringScheme& scheme,
                                std::uint64_t cell_budget = kDefaultTracebackCellBudget);

} // namespace swport::align
