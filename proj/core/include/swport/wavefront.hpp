#pragma once

#include <cstdint>
#include <optional>

#include "swport/alignment.hpp"
#include "swport/batch.hpp"

namespace swport::kernels {

// Intra-sequence kernel configuration.  The matrix is cut into horizontal
// strips of tile_rows query rows; strips run in sequence, and inside a strip
// the cells of each anti-diagonal are mutually independent, so they can be
// fanned out over worker threads.
struct WavefrontConfig {
    std::size_t tile_rows = 64;

    // Optional band: only cells with |i - j| <= band are computed.  Narrows
    // the search space (scores can only drop); disabled by default.
    std::optional<std::size_t> band;

    // Threads used inside one call, caller included.
    std::size_t workers = 1;

    // Fan out an anti-diagonal only when every worker gets at least this many
    // cells; below that the barrier costs more than the work.
    std::size_t min_parallel_cells = 16;
};

// Local alignment score of one query/database pair using the anti-diagonal
// wavefront schedule.  Produces exactly the scalar result (score and end
// coordinates) for every tile_rows and worker count; band, when set, is the
// only option that changes scores.
AlignmentResult wavefront_score(const Sequence& query, const Sequence& database,
                                const ScoringScheme& scheme,
                                const WavefrontConfig& config = {},
                                KernelStats* stats = nullptr);

} // namespace swport::kernels
