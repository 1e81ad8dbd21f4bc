#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "swport/alphabet.hpp"

namespace swport {

// Sentinel for "minus infinity" substitution scores.  Chosen so that a couple
// of gap subtractions and one addition of a real cell value cannot wrap a
// 32-bit score; cells fed such a value clamp to zero in the local recurrence.
inline constexpr std::int32_t kNegInf = std::numeric_limits<std::int32_t>::min() / 4;

// A named residue string.  Residues are kept as text; alignment entry points
// encode them against the scoring alphabet (see encode()).
struct Sequence {
    std::string id;
    std::string residues;

    std::size_t length() const noexcept { return residues.size(); }
};

// Square substitution matrix over an alphabet.  Storage reserves one extra
// row/column for the lane-padding code, pre-filled with kNegInf so padded
// batch lanes can never contribute a positive cell.
class ScoreMatrix {
public:
    ScoreMatrix() = default;
    ScoreMatrix(Alphabet alphabet, std::vector<std::int32_t> values);

    // Uniform match/mismatch matrix over the DNA alphabet; N scores
    // `wildcard_score` against everything (including itself).
    static ScoreMatrix dna(std::int32_t match, std::int32_t mismatch,
                           std::int32_t wildcard_score = 0);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t stride() const noexcept { return stride_; }

    std::int32_t at(std::size_t a, std::size_t b) const {
        return data_[a * stride_ + b];
    }
    std::int32_t score(char a, char b) const;
    void set(std::size_t a, std::size_t b, std::int32_t v) {
        data_[a * stride_ + b] = v;
    }

    // Row for a fixed first residue, indexable by second-residue code;
    // covers the pad code.  Hot loops hoist this per query row.
    const std::int32_t* row(std::size_t a) const { return &data_[a * stride_]; }

    bool symmetric() const noexcept;

private:
    Alphabet alphabet_;
    std::size_t stride_ = 0;  // alphabet size + 1 (pad row/column)
    std::vector<std::int32_t> data_;
};

// Substitution matrix plus affine gap penalties.  Penalties are magnitudes:
// a gap run of length k costs gap_open + (k-1) * gap_extend, with gap_open
// charged on the first gapped position.  When gap_extend exceeds gap_open
// the recurrence re-opens instead of extending (see warnings()), so runs
// effectively cost k * gap_open in that regime.
struct ScoringScheme {
    ScoreMatrix matrix;
    std::int32_t gap_open = 0;
    std::int32_t gap_extend = 0;

    const Alphabet& alphabet() const noexcept { return matrix.alphabet(); }

    // Non-fatal oddities worth surfacing to a user (e.g. gap_extend larger
    // than gap_open, which makes long gaps cheaper to restart than extend).
    std::vector<std::string> warnings() const;

    // Fatal problems; called by every alignment entry point.
    void validate() const;
};

// Classic DNA scheme: +match/-mismatch substitution, affine gaps.
ScoringScheme dna_scheme(std::int32_t match = 1, std::int32_t mismatch = -3,
                         std::int32_t gap_open = 5, std::int32_t gap_extend = 2);

} // namespace swport
