#include "swport/alignment.hpp"

namespace swport {

std::int32_t replay_score(const Sequence& query, const Sequence& database,
                          const AlignmentResult& result, const ScoringScheme& scheme) {
    if (result.ops.empty())
        return 0;

    const EncodedSequence q = encode(query.residues, scheme.alphabet());
    const EncodedSequence d = encode(database.residues, scheme.alphabet());

    std::size_t qi = result.start_q;  // 1-based position of the next query residue
    std::size_t di = result.start_d;
    std::int32_t total = 0;
    EditOp prev = EditOp::Match;  // any non-gap value; gap runs start with open

    // A column that continues a gap run costs gap_extend -- unless re-opening
    // is cheaper, in which case the recurrence re-opens (E takes H - gap_open
    // over E - gap_extend whenever gap_open < gap_extend, since H >= E).  The
    // transcript cannot tell the two apart, so replay charges the minimum,
    // which is what the matrix actually paid.
    const std::int32_t continue_cost = std::min(scheme.gap_open, scheme.gap_extend);

    for (std::size_t k = 0; k < result.ops.size(); ++k) {
        const EditOp op = result.ops[k];
        switch (op) {
        case EditOp::Match:
        case EditOp::Mismatch:
            if (qi > q.codes.size() || di > d.codes.size())
                throw ParseError("edit transcript walks past the end of a sequence");
            total += scheme.matrix.at(q.codes[qi - 1], d.codes[di - 1]);
            ++qi;
            ++di;
            break;
        case EditOp::GapInQuery:
            if (di > d.codes.size())
                throw ParseError("edit transcript walks past the end of the database");
            total -= (prev == EditOp::GapInQuery) ? continue_cost : scheme.gap_open;
            ++di;
            break;
        case EditOp::GapInDatabase:
            if (qi > q.codes.size())
                throw ParseError("edit transcript walks past the end of the query");
            total -= (prev == EditOp::GapInDatabase) ? continue_cost : scheme.gap_open;
            ++qi;
            break;
        }
        prev = op;
    }
    return total;
}

std::string cigar(const std::vector<EditOp>& ops) {
    static constexpr char letter[] = {'=', 'X', 'D', 'I'};
    std::string out;
    std::size_t i = 0;
    while (i < ops.size()) {
        std::size_t j = i;
        while (j < ops.size() && ops[j] == ops[i])
            ++j;
        out += std::to_string(j - i);
        out += letter[static_cast<std::size_t>(ops[i])];
        i = j;
    }
    return out;
}

} // namespace swport
