#include "swport/fasta.hpp"

#include <cctype>
#include <istream>
#include <ostream>

namespace swport::io {

std::vector<FastaRecord> parse_fasta(std::istream& in) {
    std::vector<FastaRecord> out;
    std::string line;
    bool have_record = false;
    std::size_t line_no = 0;

    auto finish = [&] {
        if (have_record && out.back().residues.empty())
            throw EmptyRecord("record \"" + out.back().header + "\" has no residues");
    };

    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '>') {
            finish();
            std::string header = line.substr(1);
            const auto b = header.find_first_not_of(" \t");
            const auto e = header.find_last_not_of(" \t");
            header = (b == std::string::npos) ? std::string{}
                                              : header.substr(b, e - b + 1);
            if (header.empty())
                throw MalformedHeader("line " + std::to_string(line_no) +
                                      ": header has no text after '>'");
            out.push_back({std::move(header), {}});
            have_record = true;
            continue;
        }
        if (!have_record)
            throw MalformedHeader("line " + std::to_string(line_no) +
                                  ": sequence data before the first '>' header");
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*')
                continue;
            out.back().residues.push_back(
                static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    finish();
    return out;
}

void emit_fasta(std::ostream& out, std::span<const FastaRecord> records,
                std::size_t wrap) {
    for (const FastaRecord& r : records) {
        out << '>' << r.header << '\n';
        if (wrap == 0) {
            out << r.residues << '\n';
            continue;
        }
        for (std::size_t i = 0; i < r.residues.size(); i += wrap)
            out << r.residues.substr(i, wrap) << '\n';
    }
}

std::vector<Sequence> to_sequences(std::span<const FastaRecord> records) {
    std::vector<Sequence> out;
    out.reserve(records.size());
    for (const FastaRecord& r : records)
        out.push_back({r.header, r.residues});
    return out;
}

} // namespace swport::io
