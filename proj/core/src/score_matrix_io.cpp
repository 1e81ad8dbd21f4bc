#include "swport/score_matrix_io.hpp"

#include <cctype>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace swport::io {

ScoreMatrix parse_score_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::string header_symbols;
    std::vector<std::vector<std::int32_t>> rows;   // by header symbol index
    std::vector<bool> row_seen;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first))
            continue;  // blank

        if (header_symbols.empty()) {
            // Header: single-character column symbols.
            std::string sym = first;
            do {
                if (sym.size() != 1)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": column symbol \"" + sym +
                                     "\" is not a single character");
                if (header_symbols.find(static_cast<char>(
                        std::toupper(static_cast<unsigned char>(sym[0])))) !=
                    std::string::npos)
                    throw UnknownSymbolDuplicate("line " + std::to_string(line_no) +
                                                 ": column symbol '" + sym +
                                                 "' appears twice");
                header_symbols.push_back(static_cast<char>(
                    std::toupper(static_cast<unsigned char>(sym[0]))));
            } while (row >> sym);
            rows.assign(header_symbols.size(), {});
            row_seen.assign(header_symbols.size(), false);
            continue;
        }

        if (first.size() != 1)
            throw ParseError("line " + std::to_string(line_no) +
                             ": row symbol \"" + first + "\" is not a single character");
        const char sym = static_cast<char>(std::toupper(static_cast<unsigned char>(first[0])));
        const auto pos = header_symbols.find(sym);
        if (pos == std::string::npos)
            throw UnknownSymbolDuplicate("line " + std::to_string(line_no) +
                                         ": row symbol '" + std::string(1, sym) +
                                         "' is not in the header");
        if (row_seen[pos])
            throw UnknownSymbolDuplicate("line " + std::to_string(line_no) +
                                         ": row '" + std::string(1, sym) +
                                         "' appears twice");
        std::vector<std::int32_t> scores;
        std::int32_t v;
        while (row >> v)
            scores.push_back(v);
        if (!row.eof())
            throw ParseError("line " + std::to_string(line_no) +
                             ": non-numeric score in row '" + std::string(1, sym) + "'");
        if (scores.size() != header_symbols.size())
            throw RaggedMatrix("line " + std::to_string(line_no) + ": row '" +
                               std::string(1, sym) + "' has " +
                               std::to_string(scores.size()) + " scores, expected " +
                               std::to_string(header_symbols.size()));
        rows[pos] = std::move(scores);
        row_seen[pos] = true;
    }

    if (header_symbols.empty())
        throw ParseError("matrix stream has no header line");
    for (std::size_t i = 0; i < row_seen.size(); ++i)
        if (!row_seen[i])
            throw RaggedMatrix("missing row for symbol '" +
                               std::string(1, header_symbols[i]) + "'");

    std::optional<char> wildcard;
    if (header_symbols.find('X') != std::string::npos)
        wildcard = 'X';
    else if (header_symbols.find('N') != std::string::npos)
        wildcard = 'N';

    std::vector<std::int32_t> flat;
    flat.reserve(header_symbols.size() * header_symbols.size());
    for (const auto& r : rows)
        flat.insert(flat.end(), r.begin(), r.end());
    return ScoreMatrix(Alphabet(header_symbols, wildcard), std::move(flat));
}

void emit_score_matrix(std::ostream& out, const ScoreMatrix& matrix) {
    const std::string& symbols = matrix.alphabet().symbols();
    out << " ";
    for (char c : symbols)
        out << ' ' << std::setw(2) << c;
    out << '\n';
    for (std::size_t a = 0; a < symbols.size(); ++a) {
        out << symbols[a];
        for (std::size_t b = 0; b < symbols.size(); ++b)
            out << ' ' << std::setw(2) << matrix.at(a, b);
        out << '\n';
    }
}

const char* blosum62_text() {
    return R"(#  Matrix made by matblas from blosum62.iij
#  BLOSUM Clustered Scoring Matrix in 1/2 Bit Units
#  Cluster Percentage: >= 62
   A  R  N  D  C  Q  E  G  H  I  L  K  M  F  P  S  T  W  Y  V  B  Z  X  *
A  4 -1 -2 -2  0 -1 -1  0 -2 -1 -1 -1 -1 -2 -1  1  0 -3 -2  0 -2 -1  0 -4
R -1  5  0 -2 -3  1  0 -2  0 -3 -2  2 -1 -3 -2 -1 -1 -3 -2 -3 -1  0 -1 -4
N -2  0  6  1 -3  0  0  0  1 -3 -3  0 -2 -3 -2  1  0 -4 -2 -3  3  0 -1 -4
D -2 -2  1  6 -3  0  2 -1 -1 -3 -4 -1 -3 -3 -1  0 -1 -4 -3 -3  4  1 -1 -4
C  0 -3 -3 -3  9 -3 -4 -3 -3 -1 -1 -3 -1 -2 -3 -1 -1 -2 -2 -1 -3 -3 -2 -4
Q -1  1  0  0 -3  5  2 -2  0 -3 -2  1  0 -3 -1  0 -1 -2 -1 -2  0  3 -1 -4
E -1  0  0  2 -4  2  5 -2  0 -3 -3  1 -2 -3 -1  0 -1 -3 -2 -2  1  4 -1 -4
G  0 -2  0 -1 -3 -2 -2  6 -2 -4 -4 -2 -3 -3 -2  0 -2 -2 -3 -3 -1 -2 -1 -4
H -2  0  1 -1 -3  0  0 -2  8 -3 -3 -1 -2 -1 -2 -1 -2 -2  2 -3  0  0 -1 -4
I -1 -3 -3 -3 -1 -3 -3 -4 -3  4  2 -3  1  0 -3 -2 -1 -3 -1  3 -3 -3 -1 -4
L -1 -2 -3 -4 -1 -2 -3 -4 -3  2  4 -2  2  0 -3 -2 -1 -2 -1  1 -4 -3 -1 -4
K -1  2  0 -1 -3  1  1 -2 -1 -3 -2  5 -1 -3 -1  0 -1 -3 -2 -2  0  1 -1 -4
M -1 -1 -2 -3 -1  0 -2 -3 -2  1  2 -1  5  0 -2 -1 -1 -1 -1  1 -3 -1 -1 -4
F -2 -3 -3 -3 -2 -3 -3 -3 -1  0  0 -3  0  6 -4 -2 -2  1  3 -1 -3 -3 -1 -4
P -1 -2 -2 -1 -3 -1 -1 -2 -2 -3 -3 -1 -2 -4  7 -1 -1 -4 -3 -2 -2 -1 -2 -4
S  1 -1  1  0 -1  0  0  0 -1 -2 -2  0 -1 -2 -1  4  1 -3 -2 -2  0  0  0 -4
T  0 -1  0 -1 -1 -1 -1 -2 -2 -1 -1 -1 -1 -2 -1  1  5 -2 -2  0 -1 -1  0 -4
W -3 -3 -4 -4 -2 -2 -3 -2 -2 -3 -2 -3 -1  1 -4 -3 -2 11  2 -3 -4 -3 -2 -4
Y -2 -2 -2 -3 -2 -1 -2 -3  2 -1 -1 -2 -1  3 -3 -2 -2  2  7 -1 -3 -2 -1 -4
V  0 -3 -3 -3 -1 -2 -2 -3 -3  3  1 -2  1 -1 -2 -2  0 -3 -1  4 -3 -2 -1 -4
B -2 -1  3  4 -3  0  1 -1  0 -3 -4  0 -3 -3 -2  0 -1 -4 -3 -3  4  1 -1 -4
Z -1  0  0  1 -3  3  4 -2  0 -3 -3  1 -1 -3 -1  0 -1 -3 -2 -2  1  4 -1 -4
X  0 -1 -1 -1 -2 -1 -1 -1 -1 -1 -1 -1 -1 -1 -2  0  0 -2 -1 -1 -1 -1 -1 -4
* -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4  1
)";
}

const ScoreMatrix& blosum62() {
    static const ScoreMatrix matrix = [] {
        std::istringstream in(blosum62_text());
        return parse_score_matrix(in);
    }();
    return matrix;
}

ScoringScheme blosum62_scheme(std::int32_t gap_open, std::int32_t gap_extend) {
    return ScoringScheme{blosum62(), gap_open, gap_extend};
}

} // namespace swport::io
