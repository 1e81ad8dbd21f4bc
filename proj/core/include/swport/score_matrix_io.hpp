#pragma once

#include <iosfwd>

#include "swport/scoring.hpp"

namespace swport::io {

// Reads a substitution matrix in the classic NCBI layout: '#' comments, a
// header line of single-character column symbols, then one row per symbol
// ("<symbol> <score>...").  Rows may come in any order but every header
// symbol needs exactly one row of full width (RaggedMatrix otherwise);
// duplicate symbols raise UnknownSymbolDuplicate.  The parsed alphabet uses
// 'X' as its wildcard when present, else 'N'.
ScoreMatrix parse_score_matrix(std::istream& in);

void emit_score_matrix(std::ostream& out, const ScoreMatrix& matrix);

// The BLOSUM62 matrix every protein path defaults to, parsed once from an
// embedded copy of the standard 24-symbol file (20 amino acids, B, Z, X, *).
const ScoreMatrix& blosum62();
const char* blosum62_text();

// BLOSUM62 with affine gap penalties (default 10 to open, 2 to extend).
ScoringScheme blosum62_scheme(std::int32_t gap_open = 10, std::int32_t gap_extend = 2);

} // namespace swport::io
