#include "swport/batch.hpp"

#include <algorithm>
#include <numeric>

#include "swport/detail/parallel.hpp"
#include "swport/scalar_align.hpp"

namespace swport::kernels {

SequenceBatch::SequenceBatch(Sequence query, std::vector<Sequence> targets,
                             std::size_t lane_width)
    : query_(std::move(query)), targets_(std::move(targets)), lane_width_(lane_width) {
    if (lane_width_ == 0)
        throw ParseError("batch lane width must be at least 1");
    if (targets_.empty())
        throw EmptyBatch("batch has no targets");
    if (query_.residues.empty())
        throw EmptySequence("batch query is empty");
    for (const Sequence& t : targets_)
        if (t.residues.empty())
            throw EmptySequence("batch target \"" + t.id + "\" is empty");
    order_.resize(targets_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
        return targets_[a].length() < targets_[b].length();
    });
}

std::vector<AlignmentResult> batch_score(const SequenceBatch& batch,
                                         const ScoringScheme& scheme,
                                         std::size_t workers,
                                         KernelStats* stats) {
    scheme.validate();
    const ScoreMatrix& mat = scheme.matrix;
    const std::uint8_t pad = static_cast<std::uint8_t>(mat.alphabet().pad_code());
    const std::int32_t go = scheme.gap_open;
    const std::int32_t ge = scheme.gap_extend;

    const EncodedSequence q = encode(batch.query().residues, mat.alphabet());
    const std::size_t m = q.codes.size();

    const auto& order = batch.sorted_order();
    std::vector<EncodedSequence> targets(order.size());
    for (std::size_t s = 0; s < order.size(); ++s)
        targets[s] = encode(batch.targets()[order[s]].residues, mat.alphabet());

    const std::size_t L = batch.lane_width();
    const std::size_t n_groups = (targets.size() + L - 1) / L;
    std::vector<AlignmentResult> results(batch.targets().size());
    std::vector<std::uint64_t> group_cells(n_groups, 0);

    detail::parallel_for(n_groups, workers, [&](std::size_t g) {
        const std::size_t lo = g * L;
        const std::size_t lanes = std::min(L, targets.size() - lo);
        std::size_t pad_len = 0;
        for (std::size_t k = 0; k < lanes; ++k)
            pad_len = std::max(pad_len, targets[lo + k].codes.size());

        // Structure-of-arrays target codes: codes[(j-1)*lanes + k] is column j
        // of lane k.  Lanes shorter than the group run on the pad symbol,
        // whose substitution row is kNegInf, so they clamp to zero.
        std::vector<std::uint8_t> codes(pad_len * lanes, pad);
        for (std::size_t k = 0; k < lanes; ++k) {
            const auto& t = targets[lo + k].codes;
            for (std::size_t j = 0; j < t.size(); ++j)
                codes[j * lanes + k] = t[j];
        }

        // DP state, one padded row per lane (index 0 is the zero boundary).
        std::vector<std::int32_t> h((pad_len + 1) * lanes, 0);
        std::vector<std::int32_t> f((pad_len + 1) * lanes, 0);
        std::vector<std::int32_t> diag(lanes), h_left(lanes), e_left(lanes);
        std::vector<std::int32_t> best(lanes, 0);
        std::vector<std::size_t> best_i(lanes, 0), best_j(lanes, 0);

        for (std::size_t i = 1; i <= m; ++i) {
            const std::int32_t* srow = mat.row(q.codes[i - 1]);
            std::fill(diag.begin(), diag.end(), 0);
            std::fill(h_left.begin(), h_left.end(), 0);
            std::fill(e_left.begin(), e_left.end(), 0);
            for (std::size_t j = 1; j <= pad_len; ++j) {
                std::int32_t* hj = &h[j * lanes];
                std::int32_t* fj = &f[j * lanes];
                const std::uint8_t* cj = &codes[(j - 1) * lanes];
                for (std::size_t k = 0; k < lanes; ++k) {
                    const std::int32_t old_h = hj[k];
                    const std::int32_t e = std::max(e_left[k] - ge, h_left[k] - go);
                    const std::int32_t fv = std::max(fj[k] - ge, old_h - go);
                    std::int32_t hv = diag[k] + srow[cj[k]];
                    hv = std::max(hv, e);
                    hv = std::max(hv, fv);
                    hv = std::max(hv, 0);
                    hj[k] = hv;
                    fj[k] = fv;
                    diag[k] = old_h;
                    h_left[k] = hv;
                    e_left[k] = e;
                    // Strictly-greater keeps the first maximum in row-major
                    // order, matching the scalar path's tie-breaking.
                    if (hv > best[k]) {
                        best[k] = hv;
                        best_i[k] = i;
                        best_j[k] = j;
                    }
                }
            }
        }

        group_cells[g] = static_cast<std::uint64_t>(m) * pad_len * lanes;
        for (std::size_t k = 0; k < lanes; ++k) {
            AlignmentResult r;
            r.score = best[k];
            r.end_q = best_i[k];
            r.end_d = best_j[k];
            results[batch.sorted_order()[lo + k]] = r;
        }
    });

    if (stats)
        for (std::uint64_t c : group_cells)
            stats->cell_updates += c;
    return results;
}

} // namespace swport::kernels
