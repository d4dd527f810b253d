#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"
#include "words.hpp"

namespace ucycle {

// Enumeration walks the whole k^n word space through the membership filter,
// so it is refused outright past this many words unless a caller raises the
// cap explicitly.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

enum class Existence { Exists, NotExists, Unsettled };

const char* to_string(Existence verdict);

// What the existence rule bound to a class says about universal cycles for
// it, together with the condition that fired, spelled out.
struct TheoremVerdict {
    Existence verdict = Existence::Unsettled;
    std::string citation;
};

// A fully bound word class: alphabet, word length, membership predicate,
// existence rule, an optional closed-form count, and an optional rule for
// the common vertex degree of its transition digraph.
class WordClass {
public:
    using Predicate = std::function<bool(std::span<const Letter>)>;
    using DegreeRule = std::function<std::optional<std::uint64_t>(std::span<const Letter>)>;

    WordClass(std::string name, int word_length, Alphabet alphabet, std::uint64_t enumeration_cap,
              Predicate predicate, TheoremVerdict theorem,
              std::optional<std::uint64_t> closed_count, DegreeRule degree_rule);

    const std::string& name() const { return name_; }
    int word_length() const { return word_length_; }
    int alphabet_size() const { return alphabet_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    std::uint64_t enumeration_cap() const { return enumeration_cap_; }

    // k^n; empty when that overflows 64 bits (then it also exceeds any cap).
    std::optional<std::uint64_t> word_space_size() const { return word_space_; }

    bool contains(std::span<const Letter> word) const { return predicate_(word); }

    const TheoremVerdict& theorem() const { return theorem_; }

    std::optional<std::uint64_t> closed_count() const { return closed_count_; }

    // Common in/out degree the class's degree rule predicts for a vertex
    // (an (n-1)-letter window), when the rule covers that vertex.
    std::optional<std::uint64_t> predicted_degree(std::span<const Letter> vertex) const;

    // Throws CapExceededError unless k^n fits under the enumeration cap.
    void require_under_cap() const;

private:
    std::string name_;
    int word_length_;
    Alphabet alphabet_;
    std::uint64_t enumeration_cap_;
    std::optional<std::uint64_t> word_space_;
    Predicate predicate_;
    TheoremVerdict theorem_;
    std::optional<std::uint64_t> closed_count_;
    DegreeRule degree_rule_;
};

// Visits every member in lexicographic order as (word, code) with code the
// word's base-k value. Stops early when f returns false. Throws
// CapExceededError when the word space exceeds the class cap.
template <typename F>
void for_each_member(const WordClass& cls, F&& f) {
    cls.require_under_cap();
    const int k = cls.alphabet_size();
    Word word(static_cast<std::size_t>(cls.word_length()), Letter{0});
    const std::uint64_t total = *cls.word_space_size();
    for (std::uint64_t code = 0; code < total; ++code) {
        if (cls.contains(word) && !f(std::span<const Letter>(word), code))
            return;
        next_word(std::span<Letter>(word), k);
    }
}

// All members in lexicographic order. Meant for desk-scale classes.
std::vector<Word> enumerate_class(const WordClass& cls);

// |class|, by enumeration when the cap permits, by closed form otherwise.
// When both routes are available they must agree; a mismatch throws
// std::logic_error, since it can only mean a defect in one of them.
std::uint64_t count_class(const WordClass& cls);

} // namespace ucycle
