#include "swport/scoring.hpp"

namespace swport {

ScoreMatrix::ScoreMatrix(Alphabet alphabet, std::vector<std::int32_t> values)
    : alphabet_(std::move(alphabet)) {
    const std::size_t n = alphabet_.size();
    if (values.size() != n * n)
        throw RaggedMatrix("expected " + std::to_string(n * n) + " scores, got " +
                           std::to_string(values.size()));
    stride_ = n + 1;
    data_.assign(stride_ * stride_, kNegInf);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            data_[a * stride_ + b] = values[a * n + b];
}

ScoreMatrix ScoreMatrix::dna(std::int32_t match, std::int32_t mismatch,
                             std::int32_t wildcard_score) {
    const Alphabet& a = Alphabet::dna();
    const std::size_t n = a.size();
    std::vector<std::int32_t> v(n * n);
    const std::size_t wild = static_cast<std::size_t>(a.wildcard_code());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == wild || j == wild)
                v[i * n + j] = wildcard_score;
            else
                v[i * n + j] = (i == j) ? match : mismatch;
        }
    return ScoreMatrix(a, std::move(v));
}

std::int32_t ScoreMatrix::score(char a, char b) const {
    const int ca = alphabet_.code(a);
    const int cb = alphabet_.code(b);
    if (ca == Alphabet::kUnknown || cb == Alphabet::kUnknown)
        throw AlphabetMismatch(std::string("cannot score pair ('") + a + "','" + b +
                               "') against alphabet \"" + alphabet_.symbols() + '"');
    return at(static_cast<std::size_t>(ca), static_cast<std::size_t>(cb));
}

bool ScoreMatrix::symmetric() const noexcept {
    const std::size_t n = alphabet_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (at(a, b) != at(b, a))
                return false;
    return true;
}

std::vector<std::string> ScoringScheme::warnings() const {
    std::vector<std::string> w;
    if (gap_extend > gap_open)
        w.push_back("gap_extend (" + std::to_string(gap_extend) +
                    ") exceeds gap_open (" + std::to_string(gap_open) +
                    "); reopening a gap is cheaper than extending it");
    return w;
}

void ScoringScheme::validate() const {
    if (alphabet().size() == 0)
        throw AlphabetMismatch("scoring scheme has an empty alphabet");
    if (gap_open < 0 || gap_extend < 0)
        throw ParseError("gap penalties are magnitudes and must be non-negative");
}

ScoringScheme dna_scheme(std::int32_t match, std::int32_t mismatch,
                         std::int32_t gap_open, std::int32_t gap_extend) {
    return ScoringScheme{ScoreMatrix::dna(match, mismatch), gap_open, gap_extend};
}

} // namespace swport
