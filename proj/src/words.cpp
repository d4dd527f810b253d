#include "words.hpp"

#include <cassert>

namespace ucycle {

std::uint64_t encode_word(std::span<const Letter> word, int k) {
    std::uint64_t code = 0;
    for (Letter x : word) {
        assert(x < k);
        code = code * static_cast<std::uint64_t>(k) + x;
    }
    return code;
}

Word decode_word(std::uint64_t code, int length, int k) {
    Word word(static_cast<std::size_t>(length), Letter{0});
    for (int i = length - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = static_cast<Letter>(code % static_cast<std::uint64_t>(k));
        code /= static_cast<std::uint64_t>(k);
    }
    assert(code == 0);
    return word;
}

bool next_word(std::span<Letter> word, int k) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i] + 1 < k) {
            ++word[i];
            return true;
        }
        word[i] = 0;
    }
    return false;
}

} // namespace ucycle
