#pragma once

// Reference implementations for the test suite.  These are deliberately
// written along different lines than the production code so that agreement
// between the two is meaningful:
//
//  - full_dp keeps the entire (m+1) x (n+1) matrix of prefix states, where
//    the library sweeps a single row;
//  - suffix_best answers "what is the best continuation from here" by
//    memoized recursion over suffixes, the mirror image of the prefix view;
//  - suffix_best_raw is the same recursion without memoisation, a literal
//    walk over every alignment, only feasible for very short inputs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swport/scalar_align.hpp"

namespace testoracle {

struct FullDp {
    std::size_t m = 0, n = 0;
    std::vector<std::int32_t> h, e, f;  // (m+1) * (n+1), row-major
    std::int32_t score = 0;
    std::size_t end_q = 0, end_d = 0;

    std::int32_t H(std::size_t i, std::size_t j) const { return h[i * (n + 1) + j]; }
};

inline FullDp full_dp(const swport::Sequence& query, const swport::Sequence& database,
                      const swport::ScoringScheme& scheme) {
    const swport::EncodedSequence q = swport::encode(query.residues, scheme.alphabet());
    const swport::EncodedSequence d = swport::encode(database.residues, scheme.alphabet());
    const std::size_t m = q.codes.size(), n = d.codes.size();
    const std::int32_t go = scheme.gap_open, ge = scheme.gap_extend;

    FullDp out;
    out.m = m;
    out.n = n;
    out.h.assign((m + 1) * (n + 1), 0);
    out.e.assign((m + 1) * (n + 1), 0);
    out.f.assign((m + 1) * (n + 1), 0);
    auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };

    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const std::int32_t e =
                std::max(out.h[at(i, j - 1)] - go, out.e[at(i, j - 1)] - ge);
            const std::int32_t f =
                std::max(out.h[at(i - 1, j)] - go, out.f[at(i - 1, j)] - ge);
            const std::int32_t sub = scheme.matrix.at(q.codes[i - 1], d.codes[j - 1]);
            std::int32_t h = out.h[at(i - 1, j - 1)] + sub;
            h = std::max({h, e, f, 0});
            out.h[at(i, j)] = h;
            out.e[at(i, j)] = e;
            out.f[at(i, j)] = f;
            if (h > out.score) {  // first maximum in row-major order
                out.score = h;
                out.end_q = i;
                out.end_d = j;
            }
        }
    }
    return out;
}

namespace detail {

// st: 0 = previous column was a pair (or the alignment starts here),
//     1 = inside a gap-in-query run, 2 = inside a gap-in-database run.
inline std::int32_t suffix_rec(const std::vector<std::uint8_t>& q,
                               const std::vector<std::uint8_t>& d,
                               const swport::ScoreMatrix& mat, std::int32_t go,
                               std::int32_t ge, std::size_t i, std::size_t j, int st,
                               std::vector<std::int32_t>* memo) {
    const std::size_t m = q.size(), n = d.size();
    const std::size_t key = (i * (n + 1) + j) * 3 + static_cast<std::size_t>(st);
    if (memo && (*memo)[key] != swport::kNegInf)
        return (*memo)[key];

    // Continuing a gap run costs ge, but the recurrence may also re-open at
    // go (E considers H - go and H >= E), so the effective continuation
    // charge is the cheaper of the two.
    const std::int32_t cont = std::min(go, ge);

    std::int32_t best = 0;  // stopping is always allowed
    if (i < m && j < n) {
        const std::int32_t v = mat.at(q[i], d[j]) +
                               suffix_rec(q, d, mat, go, ge, i + 1, j + 1, 0, memo);
        best = std::max(best, v);
    }
    if (j < n) {
        const std::int32_t v = -(st == 1 ? cont : go) +
                               suffix_rec(q, d, mat, go, ge, i, j + 1, 1, memo);
        best = std::max(best, v);
    }
    if (i < m) {
        const std::int32_t v = -(st == 2 ? cont : go) +
                               suffix_rec(q, d, mat, go, ge, i + 1, j, 2, memo);
        best = std::max(best, v);
    }
    if (memo)
        (*memo)[key] = best;
    return best;
}

} // namespace detail

// Best local score by exhaustive consideration of every alignment start and
// every continuation, memoised on (suffix position, gap state).
inline std::int32_t suffix_best(const swport::Sequence& query,
                                const swport::Sequence& database,
                                const swport::ScoringScheme& scheme) {
    const swport::EncodedSequence q = swport::encode(query.residues, scheme.alphabet());
    const swport::EncodedSequence d = swport::encode(database.residues, scheme.alphabet());
    const std::size_t m = q.codes.size(), n = d.codes.size();
    std::vector<std::int32_t> memo((m + 1) * (n + 1) * 3, swport::kNegInf);
    std::int32_t best = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            best = std::max(best, detail::suffix_rec(q.codes, d.codes, scheme.matrix,
                                                     scheme.gap_open, scheme.gap_extend,
                                                     i, j, 0, &memo));
    return best;
}

// The same recursion with no memo: literally enumerates every alignment.
// Exponential; keep both lengths at 7 or below.
inline std::int32_t suffix_best_raw(const swport::Sequence& query,
                                    const swport::Sequence& database,
                                    const swport::ScoringScheme& scheme) {
    const swport::EncodedSequence q = swport::encode(query.residues, scheme.alphabet());
    const swport::EncodedSequence d = swport::encode(database.residues, scheme.alphabet());
    std::int32_t best = 0;
    for (std::size_t i = 0; i < q.codes.size(); ++i)
        for (std::size_t j = 0; j < d.codes.size(); ++j)
            best = std::max(best, detail::suffix_rec(q.codes, d.codes, scheme.matrix,
                                                     scheme.gap_open, scheme.gap_extend,
                                                     i, j, 0, nullptr));
    return best;
}

// --- random instance helpers -------------------------------------------------

inline std::string random_seq(std::mt19937& rng, const std::string& symbols,
                              std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    std::string s(len, '?');
    for (char& c : s)
        c = symbols[pick(rng)];
    return s;
}

inline std::string random_dna(std::mt19937& rng, std::size_t len) {
    return random_seq(rng, "ACGT", len);
}

inline std::string random_protein(std::mt19937& rng, std::size_t len) {
    return random_seq(rng, "ARNDCQEGHILKMFPSTWYV", len);
}

} // namespace testoracle
