#include "word_class.hpp"

#include <stdexcept>

#include "counting.hpp"

namespace ucycle {

const char* to_string(Existence verdict) {
    switch (verdict) {
    case Existence::Exists: return "exists";
    case Existence::NotExists: return "not_exists";
    case Existence::Unsettled: return "unsettled";
    }
    return "unsettled";
}

WordClass::WordClass(std::string name, int word_length, Alphabet alphabet,
                     std::uint64_t enumeration_cap, Predicate predicate, TheoremVerdict theorem,
                     std::optional<std::uint64_t> closed_count, DegreeRule degree_rule)
    : name_(std::move(name)),
      word_length_(word_length),
      alphabet_(std::move(alphabet)),
      enumeration_cap_(enumeration_cap),
      predicate_(std::move(predicate)),
      theorem_(std::move(theorem)),
      closed_count_(closed_count),
      degree_rule_(std::move(degree_rule)) {
    if (word_length_ < 1)
        throw std::invalid_argument("word length must be at least 1");
    if (enumeration_cap_ < 1)
        throw std::invalid_argument("enumeration cap must be at least 1");
    if (!predicate_)
        throw std::invalid_argument("word class needs a membership predicate");
    word_space_ = checked_pow(static_cast<std::uint64_t>(alphabet_.size()), word_length_);
}

std::optional<std::uint64_t> WordClass::predicted_degree(std::span<const Letter> vertex) const {
    if (!degree_rule_)
        return std::nullopt;
    if (vertex.size() + 1 != static_cast<std::size_t>(word_length_))
        throw std::invalid_argument("vertex must be one letter shorter than the class words");
    return degree_rule_(vertex);
}

void WordClass::require_under_cap() const {
    if (word_space_ && *word_space_ <= enumeration_cap_)
        return;
    std::string detail = word_space_
        ? std::to_string(*word_space_)
        : std::string("more than 2^64");
    throw CapExceededError("word space of class " + name_ + " has " + detail +
                           " words, over the enumeration cap of " + std::to_string(enumeration_cap_));
}

std::vector<Word> enumerate_class(const WordClass& cls) {
    std::vector<Word> members;
    for_each_member(cls, [&](std::span<const Letter> word, std::uint64_t) {
        members.emplace_back(word.begin(), word.end());
        return true;
    });
    return members;
}

std::uint64_t count_class(const WordClass& cls) {
    const auto closed = cls.closed_count();
    const auto space = cls.word_space_size();
    if (space && *space <= cls.enumeration_cap()) {
        std::uint64_t streamed = 0;
        for_each_member(cls, [&](std::span<const Letter>, std::uint64_t) {
            ++streamed;
            return true;
        });
        if (closed && *closed != streamed)
            throw std::logic_error("class " + cls.name() + ": closed-form count " +
                                   std::to_string(*closed) + " disagrees with enumeration " +
                                   std::to_string(streamed));
        return streamed;
    }
    if (closed)
        return *closed;
    cls.require_under_cap();
    return 0; // unreachable: the line above always throws here
}

} // namespace ucycle
