#include "alphabet.hpp"

#include <array>
#include <stdexcept>

namespace ucycle {

CategoryPartition::CategoryPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty())
        throw std::invalid_argument("category partition needs at least one block");
    int total = 0;
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        if (sizes_[b] < 1)
            throw std::invalid_argument("category block sizes must be positive");
        total += sizes_[b];
        if (total > 255)
            throw std::invalid_argument("category blocks sum past the largest supported alphabet");
    }
    block_of_.reserve(static_cast<std::size_t>(total));
    for (std::size_t b = 0; b < sizes_.size(); ++b)
        block_of_.insert(block_of_.end(), static_cast<std::size_t>(sizes_[b]), static_cast<int>(b));
}

Alphabet::Alphabet(int size, std::string symbols)
    : size_(size), symbols_(std::move(symbols)) {
    check_symbols();
}

Alphabet::Alphabet(int size, std::string symbols, CategoryPartition categories)
    : size_(size), symbols_(std::move(symbols)), categories_(std::move(categories)) {
    check_symbols();
    if (categories_->alphabet_size() != size_)
        throw std::invalid_argument("category block sizes must sum to the alphabet size");
}

void Alphabet::check_symbols() const {
    if (size_ < 1)
        throw std::invalid_argument("alphabet size must be at least 1");
    if (size_ > 255)
        throw std::invalid_argument("alphabet size must be at most 255");
    if (symbols_.size() != static_cast<std::size_t>(size_))
        throw std::invalid_argument("need exactly one display symbol per letter");
    std::array<bool, 256> seen{};
    for (char c : symbols_) {
        auto& slot = seen[static_cast<unsigned char>(c)];
        if (slot)
            throw std::invalid_argument("display symbols must be distinct");
        slot = true;
    }
}

std::optional<Letter> Alphabet::letter_of(char c) const {
    for (int i = 0; i < size_; ++i)
        if (symbols_[static_cast<std::size_t>(i)] == c)
            return static_cast<Letter>(i);
    return std::nullopt;
}

const CategoryPartition& Alphabet::categories() const {
    if (!categories_)
        throw std::logic_error("alphabet has no category partition");
    return *categories_;
}

std::string Alphabet::format(std::span<const Letter> word) const {
    std::string out;
    out.reserve(word.size());
    for (Letter x : word)
        out.push_back(symbol(x));
    return out;
}

std::optional<Word> Alphabet::parse(std::string_view text) const {
    Word word;
    word.reserve(text.size());
    for (char c : text) {
        auto x = letter_of(c);
        if (!x)
            return std::nullopt;
        word.push_back(*x);
    }
    return word;
}

std::string Alphabet::default_symbols(int k) {
    static constexpr std::string_view pool =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    if (k < 1 || static_cast<std::size_t>(k) > pool.size())
        throw std::invalid_argument("no default symbols for this alphabet size; supply them explicitly");
    return std::string(pool.substr(0, static_cast<std::size_t>(k)));
}

std::string Alphabet::ranking_symbols(int k) {
    static constexpr std::string_view pool =
        "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    if (k < 1 || static_cast<std::size_t>(k) > pool.size())
        throw std::invalid_argument("no default ranking symbols for this size; supply them explicitly");
    return std::string(pool.substr(0, static_cast<std::size_t>(k)));
}

} // namespace ucycle
