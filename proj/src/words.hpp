#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ucycle {

// Letters are plain integers in [0, k). Display symbols are a presentation
// concern handled by Alphabet; everything else works on letter values.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Base-k value of a word, most significant letter first. For equal-length
// words, numeric order of codes equals lexicographic order of words.
std::uint64_t encode_word(std::span<const Letter> word, int k);

Word decode_word(std::uint64_t code, int length, int k);

// Advances word to its lexicographic successor in place. Returns false on
// the wrap from the all-(k-1) word back to the all-zero word.
bool next_word(std::span<Letter> word, int k);

} // namespace ucycle
