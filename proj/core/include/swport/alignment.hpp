#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swport/scoring.hpp"

namespace swport {

// Per-cell state of the affine-gap recurrence: best score ending at the cell
// (h), best ending in a query-gap run (e, gap consumes database residues) and
// best ending in a database-gap run (f, gap consumes query residues).
struct CellState {
    std::int32_t h = 0;
    std::int32_t e = 0;
    std::int32_t f = 0;
};

// One column of a pairwise alignment.
enum class EditOp : std::uint8_t {
    Match,          // query residue paired with an equal database residue
    Mismatch,       // query residue paired with a different database residue
    GapInQuery,     // database residue against a gap (horizontal move)
    GapInDatabase,  // query residue against a gap (vertical move)
};

struct AlignmentResult {
    std::int32_t score = 0;
    // 1-based coordinates of the maximum cell; (0,0) when score == 0, i.e.
    // the best local alignment is empty.
    std::size_t end_q = 0;
    std::size_t end_d = 0;
    // 1-based coordinates of the first aligned pair; meaningful only when
    // ops is non-empty.
    std::size_t start_q = 0;
    std::size_t start_d = 0;
    // Edit transcript from (start_q, start_d) to (end_q, end_d); filled by
    // traceback entry points, left empty by score-only ones.
    std::vector<EditOp> ops;
};

// Re-scores an edit transcript against the original sequences: substitution
// scores for paired columns, gap_open for the first column of each gap run
// and min(gap_open, gap_extend) for the rest -- the recurrence re-opens a
// gap whenever that is cheaper than extending it, and a transcript cannot
// distinguish the two.  The defining property of a traceback is that this
// reproduces AlignmentResult::score exactly.
std::int32_t replay_score(const Sequence& query, const Sequence& database,
                          const AlignmentResult& result, const ScoringScheme& scheme);

// Compact op rendering, one letter per column: '=' match, 'X' mismatch,
// 'D' gap in query, 'I' gap in database; run-length encoded ("3=1X2=").
std::string cigar(const std::vector<EditOp>& ops);

} // namespace swport
