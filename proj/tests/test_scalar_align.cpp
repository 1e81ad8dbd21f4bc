#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "swport/scalar_align.hpp"
#include "swport/score_matrix_io.hpp"

using namespace swport;

namespace {

Sequence seq(const std::string& id, const std::string& residues) {
    return Sequence{id, residues};
}

// A DNA-like scheme over ACGTZ where Z is poison: any column touching it is
// worse than stopping, no matter the rest of the alignment.
ScoringScheme poison_scheme() {
    const Alphabet ab("ACGTZ", std::nullopt);
    const std::size_t n = ab.size();
    std::vector<std::int32_t> v(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (ab.symbol(a) == 'Z' || ab.symbol(b) == 'Z')
                v[a * n + b] = -100000;
            else
                v[a * n + b] = (a == b) ? 1 : -3;
        }
    return ScoringScheme{ScoreMatrix(ab, std::move(v)), 5, 2};
}

// Schemes the randomized tests cycle through: both alphabets, gap costs from
// cheap to steep, including the legal-but-odd extend > open case.
std::vector<ScoringScheme> test_schemes() {
    std::vector<ScoringScheme> schemes;
    schemes.push_back(dna_scheme());          // +1/-3, gaps 5/2
    schemes.push_back(dna_scheme(2, -1, 3, 1));
    schemes.push_back(dna_scheme(1, -1, 0, 0));
    schemes.push_back(dna_scheme(3, -2, 1, 4));  // extend > open
    schemes.push_back(io::blosum62_scheme());    // gaps 10/2
    schemes.push_back(io::blosum62_scheme(14, 1));
    return schemes;
}

std::string random_for(const ScoringScheme& scheme, std::mt19937& rng, std::size_t len) {
    if (scheme.alphabet().size() <= 5)
        return testoracle::random_dna(rng, len);
    return testoracle::random_protein(rng, len);
}

} // namespace

TEST_CASE("cell_update: first cell of a match") {
    const CellState boundary{0, kNegInf, kNegInf};
    const auto u = align::cell_update(0, boundary, boundary, +1, 5, 2, 0);
    CHECK(u.cell.h == 1);
    CHECK(u.cell.e == -5);
    CHECK(u.cell.f == -5);
    CHECK(u.running_max == 1);
}

TEST_CASE("cell_update: negative substitution clamps to zero") {
    const CellState zero{0, 0, 0};
    const auto u = align::cell_update(0, zero, zero, -3, 5, 2, 0);
    CHECK(u.cell.h == 0);
    CHECK(u.running_max == 0);

    const auto kept = align::cell_update(0, zero, zero, -3, 5, 2, 7);
    CHECK(kept.running_max == 7);
}

TEST_CASE("cell_update: gap-in-query state prefers extension here") {
    // E = max(left.e - extend, left.h - open) = max(3-2, 7-10) = 1.
    const CellState left{7, 3, 0};
    const CellState up{0, 0, 0};
    const auto u = align::cell_update(0, up, left, -100, 10, 2, 0);
    CHECK(u.cell.e == 1);
    CHECK(u.cell.h == 1);  // carried into H as the best option
}

TEST_CASE("cell_update: scheme overload forwards penalties") {
    const CellState boundary{0, kNegInf, kNegInf};
    const auto direct = align::cell_update(0, boundary, boundary, 4, 10, 2, 0);
    const auto via = align::cell_update(0, boundary, boundary, 4, io::blosum62_scheme(), 0);
    CHECK(direct.cell.h == via.cell.h);
    CHECK(direct.cell.e == via.cell.e);
    CHECK(direct.cell.f == via.cell.f);
}

TEST_CASE("score_local: single residue match") {
    const auto r = align::score_local(seq("q", "A"), seq("d", "A"), dna_scheme());
    CHECK(r.score == 1);
    CHECK(r.end_q == 1);
    CHECK(r.end_d == 1);
}

TEST_CASE("score_local: identical quads") {
    const auto r = align::score_local(seq("q", "ACGT"), seq("d", "ACGT"), dna_scheme());
    CHECK(r.score == 4);
    CHECK(r.end_q == 4);
    CHECK(r.end_d == 4);
}

TEST_CASE("score_local: best local hit is the common suffix") {
    const auto r = align::score_local(seq("q", "ACGT"), seq("d", "AGT"), dna_scheme());
    CHECK(r.score == 2);
    CHECK(r.end_q == 4);
    CHECK(r.end_d == 3);
}

TEST_CASE("score_local: all-mismatch pair scores zero with no coordinates") {
    const auto r = align::score_local(seq("q", "AAAA"), seq("d", "CCCC"), dna_scheme());
    CHECK(r.score == 0);
    CHECK(r.end_q == 0);
    CHECK(r.end_d == 0);
}

TEST_CASE("score_local: maximum ties resolve to smallest (q, d)") {
    // "A" vs "AA": cells (1,1) and (1,2) both score 1.
    const auto r1 = align::score_local(seq("q", "A"), seq("d", "AA"), dna_scheme());
    CHECK(r1.end_q == 1);
    CHECK(r1.end_d == 1);
    // "AA" vs "A": cells (1,1) and (2,1).
    const auto r2 = align::score_local(seq("q", "AA"), seq("d", "A"), dna_scheme());
    CHECK(r2.end_q == 1);
    CHECK(r2.end_d == 1);
}

TEST_CASE("score_local: rejects empty input and unmappable symbols") {
    CHECK_THROWS_AS(align::score_local(seq("q", ""), seq("d", "A"), dna_scheme()),
                    EmptySequence);
    CHECK_THROWS_AS(align::score_local(seq("q", "A"), seq("d", ""), dna_scheme()),
                    EmptySequence);
    // '1' is not a letter, so the DNA wildcard does not absorb it.
    CHECK_THROWS_AS(align::score_local(seq("q", "AC1T"), seq("d", "ACGT"), dna_scheme()),
                    AlphabetMismatch);
}

TEST_CASE("score_local: unknown letters ride the wildcard") {
    // 'B' is a letter, so DNA mode maps it to N (scores 0 against everything):
    // the B column contributes nothing but does not fault.
    const auto r = align::score_local(seq("q", "ABA"), seq("d", "ABA"), dna_scheme());
    CHECK(r.score == 2);
    const auto enc = encode("ABA", Alphabet::dna());
    CHECK(enc.wildcard_substitutions == 1);
}

TEST_CASE("score_local: agrees with the full-matrix reference on random inputs") {
    std::mt19937 rng(11071);
    std::uniform_int_distribution<std::size_t> len(1, 64);
    const auto schemes = test_schemes();
    for (int iter = 0; iter < 240; ++iter) {
        const auto& scheme = schemes[static_cast<std::size_t>(iter) % schemes.size()];
        const Sequence q = seq("q", random_for(scheme, rng, len(rng)));
        const Sequence d = seq("d", random_for(scheme, rng, len(rng)));
        const auto got = align::score_local(q, d, scheme);
        const auto want = testoracle::full_dp(q, d, scheme);
        REQUIRE(got.score == want.score);
        REQUIRE(got.end_q == want.end_q);
        REQUIRE(got.end_d == want.end_d);
    }
}

TEST_CASE("score_local: agrees with exhaustive alignment enumeration") {
    std::mt19937 rng(2203);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    const auto schemes = test_schemes();
    for (int iter = 0; iter < 120; ++iter) {
        const auto& scheme = schemes[static_cast<std::size_t>(iter) % schemes.size()];
        const Sequence q = seq("q", random_for(scheme, rng, len(rng)));
        const Sequence d = seq("d", random_for(scheme, rng, len(rng)));
        REQUIRE(align::score_local(q, d, scheme).score ==
                testoracle::suffix_best(q, d, scheme));
    }
}

TEST_CASE("reference implementations agree with each other") {
    // The prefix-matrix and suffix-recursion oracles take different routes;
    // their agreement is checked so a common bug cannot hide in one of them.
    std::mt19937 rng(404);
    std::uniform_int_distribution<std::size_t> len(1, 7);
    for (int iter = 0; iter < 40; ++iter) {
        const Sequence q = seq("q", testoracle::random_dna(rng, len(rng)));
        const Sequence d = seq("d", testoracle::random_dna(rng, len(rng)));
        const auto full = testoracle::full_dp(q, d, dna_scheme());
        CHECK(full.score == testoracle::suffix_best(q, d, dna_scheme()));
        CHECK(full.score == testoracle::suffix_best_raw(q, d, dna_scheme()));
    }
}

TEST_CASE("score_local: symmetric matrix makes the score symmetric") {
    REQUIRE(io::blosum62().symmetric());
    REQUIRE(ScoreMatrix::dna(1, -3).symmetric());
    std::mt19937 rng(909);
    std::uniform_int_distribution<std::size_t> len(1, 48);
    for (int iter = 0; iter < 60; ++iter) {
        const auto& scheme = (iter % 2) ? io::blosum62_scheme() : dna_scheme();
        const Sequence q = seq("q", random_for(scheme, rng, len(rng)));
        const Sequence d = seq("d", random_for(scheme, rng, len(rng)));
        CHECK(align::score_local(q, d, scheme).score ==
              align::score_local(d, q, scheme).score);
    }
}

TEST_CASE("score_local: zero exactly when no residue pair scores positive") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<std::size_t> len(1, 24);
    const auto schemes = test_schemes();
    for (int iter = 0; iter < 120; ++iter) {
        const auto& scheme = schemes[static_cast<std::size_t>(iter) % schemes.size()];
        const Sequence q = seq("q", random_for(scheme, rng, len(rng)));
        const Sequence d = seq("d", random_for(scheme, rng, len(rng)));
        const auto r = align::score_local(q, d, scheme);
        REQUIRE(r.score >= 0);
        std::int32_t best_pair = kNegInf;
        for (char a : q.residues)
            for (char b : d.residues)
                best_pair = std::max(best_pair, scheme.matrix.score(a, b));
        CHECK((r.score > 0) == (best_pair > 0));
    }
}

TEST_CASE("score_local: self-alignment hits the diagonal sum under BLOSUM62") {
    std::mt19937 rng(6248);
    std::uniform_int_distribution<std::size_t> len(1, 32);
    const auto scheme = io::blosum62_scheme();
    for (int iter = 0; iter < 40; ++iter) {
        const Sequence s = seq("s", testoracle::random_protein(rng, len(rng)));
        std::int32_t diag = 0;
        for (char c : s.residues)
            diag += scheme.matrix.score(c, c);
        const auto r = align::score_local(s, s, scheme);
        CHECK(r.score >= diag);  // aligning s with itself is one candidate
        // All 20 canonical diagonal entries are positive, so nothing beats
        // the full self-match.
        CHECK(r.score == diag);
        CHECK(r.score == testoracle::full_dp(s, s, scheme).score);
    }
}

TEST_CASE("score_local: a poison prefix on both sides changes nothing") {
    const auto scheme = poison_scheme();
    std::mt19937 rng(731);
    std::uniform_int_distribution<std::size_t> len(1, 32);
    for (int iter = 0; iter < 40; ++iter) {
        const Sequence q = seq("q", testoracle::random_dna(rng, len(rng)));
        const Sequence d = seq("d", testoracle::random_dna(rng, len(rng)));
        const auto plain = align::score_local(q, d, scheme);
        const auto padded =
            align::score_local(seq("q", "Z" + q.residues), seq("d", "Z" + d.residues), scheme);
        CHECK(plain.score == padded.score);
    }
}

TEST_CASE("traceback_local: identity alignment") {
    const auto r = align::traceback_local(seq("q", "ACGT"), seq("d", "ACGT"), dna_scheme());
    CHECK(r.score == 4);
    CHECK(r.start_q == 1);
    CHECK(r.start_d == 1);
    CHECK(r.end_q == 4);
    CHECK(r.end_d == 4);
    REQUIRE(r.ops.size() == 4);
    for (EditOp op : r.ops)
        CHECK(op == EditOp::Match);
    CHECK(cigar(r.ops) == "4=");
}

TEST_CASE("traceback_local: zero score means an empty transcript") {
    const auto r = align::traceback_local(seq("q", "AAAA"), seq("d", "CCCC"), dna_scheme());
    CHECK(r.score == 0);
    CHECK(r.ops.empty());
    CHECK(r.end_q == 0);
    CHECK(r.end_d == 0);
}

TEST_CASE("traceback_local: common-suffix alignment coordinates") {
    const auto r = align::traceback_local(seq("q", "ACGT"), seq("d", "AGT"), dna_scheme());
    CHECK(r.score == 2);
    CHECK(cigar(r.ops) == "2=");
    CHECK(r.start_q == 3);
    CHECK(r.start_d == 2);
    CHECK(r.end_q == 4);
    CHECK(r.end_d == 3);
}

TEST_CASE("traceback_local: path through a deletion verified by enumeration") {
    const Sequence q = seq("q", "ACGTACGT");
    const Sequence d = seq("d", "ACGACGT");
    const auto r = align::traceback_local(q, d, dna_scheme());
    CHECK(r.score == testoracle::suffix_best_raw(q, d, dna_scheme()));
    CHECK(replay_score(q, d, r, dna_scheme()) == r.score);
}

TEST_CASE("traceback_local: replay reproduces the score on random inputs") {
    std::mt19937 rng(8813);
    std::uniform_int_distribution<std::size_t> len(1, 64);
    const auto schemes = test_schemes();
    for (int iter = 0; iter < 200; ++iter) {
        const auto& scheme = schemes[static_cast<std::size_t>(iter) % schemes.size()];
        const Sequence q = seq("q", random_for(scheme, rng, len(rng)));
        const Sequence d = seq("d", random_for(scheme, rng, len(rng)));
        const auto r = align::traceback_local(q, d, scheme);
        REQUIRE(r.score == align::score_local(q, d, scheme).score);
        REQUIRE(replay_score(q, d, r, scheme) == r.score);
        if (!r.ops.empty()) {
            // The transcript must consume exactly the residues between the
            // start and end coordinates on both axes.
            std::size_t q_used = 0, d_used = 0;
            for (EditOp op : r.ops) {
                q_used += (op != EditOp::GapInQuery);
                d_used += (op != EditOp::GapInDatabase);
            }
            REQUIRE(q_used == r.end_q - r.start_q + 1);
            REQUIRE(d_used == r.end_d - r.start_d + 1);
            CHECK(r.ops.front() != EditOp::GapInQuery);
            CHECK(r.ops.back() != EditOp::GapInQuery);
        }
    }
}

TEST_CASE("traceback_local: refuses to materialise past the cell budget") {
    const Sequence q = seq("q", "ACGTACGT");
    const Sequence d = seq("d", "ACGTACGT");
    CHECK_THROWS_AS(align::traceback_local(q, d, dna_scheme(), 16), MatrixTooLarge);
    CHECK_NOTHROW(align::traceback_local(q, d, dna_scheme(), 64));
}

TEST_CASE("cigar: run-length rendering of mixed transcripts") {
    using E = EditOp;
    const std::vector<E> ops{E::Match,    E::Match,      E::Match,
                             E::Mismatch, E::Match,      E::Match,
                             E::GapInQuery, E::GapInQuery, E::GapInDatabase};
    CHECK(cigar(ops) == "3=1X2=2D1I");
    CHECK(cigar({}) == "");
}

TEST_CASE("replay_score: affine gap charged open once then extend") {
    using E = EditOp;
    const Sequence q = seq("q", "AT");
    const Sequence d = seq("d", "ACCT");
    AlignmentResult r;
    r.start_q = 1;
    r.start_d = 1;
    r.end_q = 2;
    r.end_d = 4;
    r.ops = {E::Match, E::GapInQuery, E::GapInQuery, E::Match};
    // +1 - 5 - 2 + 1 with gap costs 5 open / 2 extend.
    CHECK(replay_score(q, d, r, dna_scheme()) == -5);
}
