#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swport/errors.hpp"

namespace swport {

// Residue alphabet: a fixed symbol set plus an optional wildcard.  Symbols are
// stored upper-case; encoding maps a character to its index in the symbol
// string.  Unknown *letters* fall back to the wildcard when one is defined
// (the usual treatment of ambiguity codes); anything else is rejected.
class Alphabet {
public:
    static constexpr int kUnknown = -1;

    Alphabet() = default;
    Alphabet(std::string symbols, std::optional<char> wildcard);

    // Nucleotide alphabet ACGTN with N as the wildcard.
    static const Alphabet& dna();

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }
    bool has_wildcard() const noexcept { return wildcard_code_ >= 0; }
    int wildcard_code() const noexcept { return wildcard_code_; }

    // Index of `c` in the alphabet (case-insensitive), or kUnknown.
    int code(char c) const noexcept {
        return table_[static_cast<unsigned char>(c)];
    }
    char symbol(std::size_t code) const { return symbols_.at(code); }

    // Code reserved for batch-lane padding; one past the last real symbol.
    // Scoring tables are sized to cover it (see ScoreMatrix).
    std::size_t pad_code() const noexcept { return symbols_.size(); }

    bool operator==(const Alphabet& other) const noexcept {
        return symbols_ == other.symbols_ && wildcard_code_ == other.wildcard_code_;
    }

private:
    std::string symbols_;
    std::array<int16_t, 256> table_{};
    int wildcard_code_ = kUnknown;
};

// Result of encoding a residue string: codes plus how many residues had to be
// replaced by the wildcard (callers may want to warn when this is non-zero).
struct EncodedSequence {
    std::vector<std::uint8_t> codes;
    std::size_t wildcard_substitutions = 0;
};

// Encodes `residues` against `alphabet`.  Throws AlphabetMismatch for symbols
// that are neither in the alphabet nor wildcard-mappable letters, and
// EmptySequence when `residues` is empty.
EncodedSequence encode(const std::string& residues, const Alphabet& alphabet);

} // namespace swport
