#pragma once

#include <cstdint>
#include <vector>

#include "swport/alignment.hpp"

namespace swport::kernels {

// Work actually performed by a kernel call.  Batch lanes run to the padded
// group length, so cell_updates can exceed the nominal |query| * sum(|target|)
// product; callers that account GCUPS use the nominal count instead.
struct KernelStats {
    std::uint64_t cell_updates = 0;
};

// One query against many targets, scored in lockstep lanes (one target per
// lane, every lane at the same (row, column) of its own matrix).  Targets are
// ordered by ascending length internally so that lanes grouped together run
// to similar padded lengths; results always come back in the caller's order.
class SequenceBatch {
public:
    SequenceBatch(Sequence query, std::vector<Sequence> targets,
                  std::size_t lane_width = 8);

    const Sequence& query() const noexcept { return query_; }
    const std::vector<Sequence>& targets() const noexcept { return targets_; }
    std::size_t lane_width() const noexcept { return lane_width_; }

    // Target indices sorted by (length, original position).
    const std::vector<std::size_t>& sorted_order() const noexcept { return order_; }

private:
    Sequence query_;
    std::vector<Sequence> targets_;
    std::size_t lane_width_;
    std::vector<std::size_t> order_;
};

// Scores every target of the batch against its query.  results[i] corresponds
// to batch.targets()[i] regardless of lane grouping.  Lane groups are
// independent, so they may be fanned out over `workers` threads; the output
// is identical for any worker count and any lane width.
std::vector<AlignmentResult> batch_score(const SequenceBatch& batch,
                                         const ScoringScheme& scheme,
                                         std::size_t workers = 1,
                                         KernelStats* stats = nullptr);

} // namespace swport::kernels
