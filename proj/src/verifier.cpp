#include "verifier.hpp"

#include <stdexcept>

namespace ucycle {

std::vector<Word> windows(std::span<const Letter> s, int n) {
    if (n < 1)
        throw std::invalid_argument("windows need a positive length");
    if (s.empty())
        throw std::invalid_argument("windows of an empty string are undefined");
    std::vector<Word> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        Word w;
        w.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            w.push_back(s[(i + static_cast<std::size_t>(j)) % s.size()]);
        out.push_back(std::move(w));
    }
    return out;
}

const char* to_string(VerifyOutcome outcome) {
    switch (outcome) {
    case VerifyOutcome::Valid: return "valid";
    case VerifyOutcome::LengthMismatch: return "length_mismatch";
    case VerifyOutcome::NonMemberWindow: return "non_member_window";
    case VerifyOutcome::DuplicateWindow: return "duplicate_window";
    case VerifyOutcome::Incomplete: return "incomplete";
    }
    return "incomplete";
}

VerificationResult verify_ucycle(std::span<const Letter> s, const WordClass& cls) {
    VerificationResult result;
    std::uint64_t expected = 0;
    for_each_member(cls, [&](std::span<const Letter>, std::uint64_t) {
        ++expected;
        return true;
    });
    result.expected_length = expected;
    result.actual_length = s.size();

    const int n = cls.word_length();
    const int k = cls.alphabet_size();

    if (s.empty()) {
        result.outcome = VerifyOutcome::LengthMismatch;
        return result;
    }

    std::vector<std::uint64_t> first_seen(*cls.word_space_size(), ~std::uint64_t{0});
    std::uint64_t distinct = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Word w;
        w.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            w.push_back(s[(i + static_cast<std::size_t>(j)) % s.size()]);
        if (!cls.contains(w)) {
            result.outcome = VerifyOutcome::NonMemberWindow;
            result.window_index = i;
            result.window = std::move(w);
            return result;
        }
        const std::uint64_t code = encode_word(w, k);
        if (first_seen[code] != ~std::uint64_t{0}) {
            result.outcome = VerifyOutcome::DuplicateWindow;
            result.first_index = first_seen[code];
            result.window_index = i;
            result.window = std::move(w);
            return result;
        }
        first_seen[code] = i;
        ++distinct;
    }

    if (result.actual_length != expected) {
        result.outcome = VerifyOutcome::LengthMismatch;
        return result;
    }

    // With the length right and all windows distinct members, nothing can be
    // missing; this is a backstop against defects in the logic above.
    if (distinct < expected) {
        result.outcome = VerifyOutcome::Incomplete;
        result.missing_count = expected - distinct;
        return result;
    }

    result.valid = true;
    result.outcome = VerifyOutcome::Valid;
    return result;
}

} // namespace ucycle
