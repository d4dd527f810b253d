#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "words.hpp"

namespace ucycle {

// Splits the alphabet into labeled blocks of consecutive letters, given by
// the block sizes. Block 0 covers letters [0, sizes[0]), block 1 the next
// sizes[1] letters, and so on.
class CategoryPartition {
public:
    explicit CategoryPartition(std::vector<int> sizes);

    int block_count() const { return static_cast<int>(sizes_.size()); }
    int block_size(int block) const { return sizes_[static_cast<std::size_t>(block)]; }
    int block_of(Letter x) const { return block_of_[x]; }
    int alphabet_size() const { return static_cast<int>(block_of_.size()); }
    const std::vector<int>& sizes() const { return sizes_; }

private:
    std::vector<int> sizes_;
    std::vector<int> block_of_;
};

// A k-letter alphabet with one display symbol per letter and an optional
// category partition. Symbols must be distinct so parsing is unambiguous.
class Alphabet {
public:
    Alphabet(int size, std::string symbols);
    Alphabet(int size, std::string symbols, CategoryPartition categories);

    int size() const { return size_; }
    char symbol(Letter x) const { return symbols_[x]; }
    const std::string& symbols() const { return symbols_; }

    std::optional<Letter> letter_of(char c) const;

    bool has_categories() const { return categories_.has_value(); }
    const CategoryPartition& categories() const;

    std::string format(std::span<const Letter> word) const;

    // Empty optional when text contains a symbol outside the alphabet.
    std::optional<Word> parse(std::string_view text) const;

    // 'A'..'Z', then 'a'..'z', then '0'..'9', truncated to k symbols.
    static std::string default_symbols(int k);

    // Rankings read naturally as place numbers: '1'..'9', then letters for
    // places ten and up.
    static std::string ranking_symbols(int k);

private:
    void check_symbols() const;

    int size_;
    std::string symbols_;
    std::optional<CategoryPartition> categories_;
};

} // namespace ucycle
