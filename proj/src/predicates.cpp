#include "predicates.hpp"

#include <array>
#include <cstdint>

namespace ucycle {

namespace {

// 256-bit presence mask, enough for any letter value.
struct LetterSet {
    std::array<std::uint64_t, 4> bits{};

    // Returns whether x was already present, then inserts it.
    bool test_and_set(Letter x) {
        std::uint64_t& slot = bits[x >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (x & 63);
        const bool present = (slot & bit) != 0;
        slot |= bit;
        return present;
    }

    int count() const {
        int total = 0;
        for (std::uint64_t w : bits)
            total += __builtin_popcountll(w);
        return total;
    }
};

} // namespace

bool is_noninjective(std::span<const Letter> word) {
    LetterSet seen;
    for (Letter x : word)
        if (seen.test_and_set(x))
            return true;
    return false;
}

bool is_injective(std::span<const Letter> word) {
    return !is_noninjective(word);
}

bool is_nonsurjective(std::span<const Letter> word, int k) {
    LetterSet seen;
    for (Letter x : word)
        seen.test_and_set(x);
    return seen.count() < k;
}

bool is_surjective(std::span<const Letter> word, int k) {
    return !is_nonsurjective(word, k);
}

bool is_alternating(std::span<const Letter> word, const CategoryPartition& partition) {
    for (std::size_t i = 1; i < word.size(); ++i)
        if (partition.block_of(word[i - 1]) == partition.block_of(word[i]))
            return false;
    return true;
}

bool is_legal_ranking(std::span<const Letter> word, int k) {
    std::array<std::uint32_t, 256> counts{};
    for (Letter x : word)
        ++counts[x];
    // Walking values upward, the number of strictly smaller entries when we
    // reach a present value v is the running total so far; it must equal v.
    std::uint32_t below = 0;
    for (int v = 0; v < k; ++v) {
        if (counts[static_cast<std::size_t>(v)] != 0 && below != static_cast<std::uint32_t>(v))
            return false;
        below += counts[static_cast<std::size_t>(v)];
    }
    return true;
}

bool is_illegal_ranking(std::span<const Letter> word, int k) {
    return !is_legal_ranking(word, k);
}

bool is_nonpassword(std::span<const Letter> word, const CategoryPartition& partition) {
    LetterSet hit;
    for (Letter x : word)
        hit.test_and_set(static_cast<Letter>(partition.block_of(x)));
    return hit.count() < partition.block_count();
}

bool is_password(std::span<const Letter> word, const CategoryPartition& partition) {
    return !is_nonpassword(word, partition);
}

} // namespace ucycle
