#include "swport/alphabet.hpp"

#include <cctype>

namespace swport {

Alphabet::Alphabet(std::string symbols, std::optional<char> wildcard) {
    table_.fill(kUnknown);
    symbols_.reserve(symbols.size());
    for (char c : symbols) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (table_[static_cast<unsigned char>(up)] != kUnknown)
            throw UnknownSymbolDuplicate(std::string("symbol '") + up +
                                         "' appears twice in alphabet");
        table_[static_cast<unsigned char>(up)] = static_cast<int16_t>(symbols_.size());
        symbols_.push_back(up);
        // Accept lower-case input transparently.
        const char lo = static_cast<char>(std::tolower(static_cast<unsigned char>(up)));
        if (lo != up)
            table_[static_cast<unsigned char>(lo)] = table_[static_cast<unsigned char>(up)];
    }
    if (wildcard) {
        wildcard_code_ = code(*wildcard);
        if (wildcard_code_ == kUnknown)
            throw ParseError(std::string("wildcard '") + *wildcard +
                             "' is not part of the alphabet");
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a("ACGTN", 'N');
    return a;
}

EncodedSequence encode(const std::string& residues, const Alphabet& alphabet) {
    if (residues.empty())
        throw EmptySequence("cannot encode an empty residue string");
    EncodedSequence out;
    out.codes.reserve(residues.size());
    for (char c : residues) {
        int code = alphabet.code(c);
        if (code == Alphabet::kUnknown) {
            const bool letter = std::isalpha(static_cast<unsigned char>(c)) != 0;
            if (letter && alphabet.has_wildcard()) {
                code = alphabet.wildcard_code();
                ++out.wildcard_substitutions;
            } else {
                throw AlphabetMismatch(std::string("residue '") + c +
                                       "' is not covered by alphabet \"" +
                                       alphabet.symbols() + '"');
            }
        }
        out.codes.push_back(static_cast<std::uint8_t>(code));
    }
    return out;
}

} // namespace swport
