#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "swport/scoring.hpp"

namespace swport::io {

struct FastaRecord {
    std::string header;    // text after '>', trimmed
    std::string residues;  // upper-cased, whitespace and '*' removed
};

// Reads all records from a FASTA stream.  Blank lines are ignored, residue
// lines are concatenated, upper-cased and stripped of stop marks ('*').
// Throws MalformedHeader for residue data before the first '>' or an empty
// header, and EmptyRecord for a header with no residues.
std::vector<FastaRecord> parse_fasta(std::istream& in);

void emit_fasta(std::ostream& out, std::span<const FastaRecord> records,
                std::size_t wrap = 60);

// FastaRecord -> Sequence (header becomes the id).
std::vector<Sequence> to_sequences(std::span<const FastaRecord> records);

} // namespace swport::io
