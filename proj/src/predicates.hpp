#pragma once

#include <span>

#include "alphabet.hpp"
#include "words.hpp"

namespace ucycle {

// Membership rules for the registered word classes. All of them are pure
// functions of the word (plus alphabet data where the rule needs it).

// Some letter occurs more than once.
bool is_noninjective(std::span<const Letter> word);
bool is_injective(std::span<const Letter> word);

// Some letter of the alphabet never occurs.
bool is_nonsurjective(std::span<const Letter> word, int k);
bool is_surjective(std::span<const Letter> word, int k);

// Adjacent letters always come from different blocks of a two-block
// partition. Words shorter than two letters alternate vacuously.
bool is_alternating(std::span<const Letter> word, const CategoryPartition& partition);

// Competition ranking over n contestants with ties: whoever holds place p
// has exactly p - 1 contestants strictly ahead. With 0-based stored ranks
// that reads: every present value v has exactly v entries below it.
bool is_legal_ranking(std::span<const Letter> word, int k);
bool is_illegal_ranking(std::span<const Letter> word, int k);

// Password rule over a category partition: a password draws from every
// block; a non-password misses at least one.
bool is_password(std::span<const Letter> word, const CategoryPartition& partition);
bool is_nonpassword(std::span<const Letter> word, const CategoryPartition& partition);

} // namespace ucycle
