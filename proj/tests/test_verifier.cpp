#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "registry.hpp"
#include "verifier.hpp"

using namespace ucycle;

namespace {

WordClass plain(const std::string& name, int n, int k, std::string symbols = "") {
    ClassSpec spec;
    spec.name = name;
    spec.word_length = n;
    spec.alphabet_size = k;
    spec.symbols = std::move(symbols);
    return make_class(spec);
}

Word parse(const WordClass& cls, const std::string& text) {
    auto parsed = cls.alphabet().parse(text);
    REQUIRE(parsed.has_value());
    return *parsed;
}

} // namespace

TEST_CASE("windows wrap around the cycle") {
    WordClass cls = plain("all_words", 3, 2, "01");
    const Word s = parse(cls, "11101000");
    const auto all = windows(s, 3);
    REQUIRE(all.size() == 8);
    std::set<Word> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 8); // every binary 3-word appears exactly once
    CHECK(all.front() == parse(cls, "111"));
    CHECK(all.back() == parse(cls, "011")); // wraps from index 7 through 0, 1

    const auto single = windows(Word{1}, 2);
    REQUIRE(single.size() == 1);
    CHECK(single.front() == Word{1, 1});

    CHECK_THROWS_AS(windows(Word{}, 2), std::invalid_argument);
    CHECK_THROWS_AS(windows(s, 0), std::invalid_argument);
}

TEST_CASE("window count and length hold for random strings") {
    std::mt19937 rng(3u);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 20;
        const int n = 1 + static_cast<int>(rng() % 6);
        Word s(m);
        for (auto& x : s)
            x = static_cast<Letter>(rng() % 4u);
        const auto all = windows(s, n);
        CHECK(all.size() == m);
        for (const Word& w : all)
            CHECK(w.size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("the classic binary cycle verifies") {
    WordClass cls = plain("all_words", 3, 2, "01");
    const VerificationResult result = verify_ucycle(parse(cls, "11101000"), cls);
    CHECK(result.valid);
    CHECK(result.outcome == VerifyOutcome::Valid);
    CHECK(result.expected_length == 8);
    CHECK(result.actual_length == 8);
}

TEST_CASE("the 21-letter repeated-letter cycle verifies") {
    WordClass cls = plain("noninjective", 3, 3);
    const Word s = parse(cls, "AAACACCCBBBAABABBCBCC");
    CHECK(verify_ucycle(s, cls).valid);

    SUBCASE("every rotation stays valid") {
        for (std::size_t shift = 0; shift < s.size(); ++shift) {
            Word rotated;
            for (std::size_t i = 0; i < s.size(); ++i)
                rotated.push_back(s[(shift + i) % s.size()]);
            CAPTURE(shift);
            CHECK(verify_ucycle(rotated, cls).valid);
        }
    }
}

TEST_CASE("one flipped bit is caught as a duplicate window") {
    WordClass cls = plain("all_words", 3, 2, "01");
    const VerificationResult result = verify_ucycle(parse(cls, "11101001"), cls);
    CHECK_FALSE(result.valid);
    CHECK(result.outcome == VerifyOutcome::DuplicateWindow);
    CHECK(result.first_index == 0);
    CHECK(result.window_index == 7);
    CHECK(cls.alphabet().format(result.window) == "111");
}

TEST_CASE("a doubled cycle is a duplicate, not a length mismatch") {
    WordClass cls = plain("all_words", 3, 2, "01");
    const VerificationResult result = verify_ucycle(parse(cls, "1110100011101000"), cls);
    CHECK_FALSE(result.valid);
    CHECK(result.outcome == VerifyOutcome::DuplicateWindow);
    CHECK(result.first_index == 0);
    CHECK(result.window_index == 8);
    CHECK(cls.alphabet().format(result.window) == "111");
}

TEST_CASE("a clean but short scan is a length mismatch") {
    WordClass cls = plain("all_words", 3, 2, "01");
    const VerificationResult result = verify_ucycle(parse(cls, "1110100"), cls);
    CHECK_FALSE(result.valid);
    CHECK(result.outcome == VerifyOutcome::LengthMismatch);
    CHECK(result.expected_length == 8);
    CHECK(result.actual_length == 7);
}

TEST_CASE("windows outside the class are reported with their index") {
    WordClass cls = plain("noninjective", 3, 3);
    const VerificationResult result = verify_ucycle(parse(cls, "ABC"), cls);
    CHECK_FALSE(result.valid);
    CHECK(result.outcome == VerifyOutcome::NonMemberWindow);
    CHECK(result.window_index == 0);
    CHECK(cls.alphabet().format(result.window) == "ABC");

    // the scan runs in index order, so the first bad window wins
    const VerificationResult later = verify_ucycle(parse(cls, "AABCA"), cls);
    CHECK(later.outcome == VerifyOutcome::NonMemberWindow);
    CHECK(later.window_index == 1);
    CHECK(cls.alphabet().format(later.window) == "ABC");
}

TEST_CASE("empty candidates are length mismatches") {
    WordClass cls = plain("all_words", 2, 2, "01");
    const VerificationResult result = verify_ucycle(Word{}, cls);
    CHECK_FALSE(result.valid);
    CHECK(result.outcome == VerifyOutcome::LengthMismatch);
    CHECK(result.actual_length == 0);
    CHECK(result.expected_length == 4);
}

TEST_CASE("verification agrees with a brute-force multiset comparison") {
    WordClass cls = plain("all_words", 2, 2, "01");
    const std::vector<Word> members = enumerate_class(cls);
    std::mt19937 rng(17u);
    int valids = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t m = 1 + rng() % 6;
        Word s(m);
        for (auto& x : s)
            x = static_cast<Letter>(rng() % 2u);
        const bool verdict = verify_ucycle(s, cls).valid;
        std::vector<Word> seen = windows(s, 2);
        std::sort(seen.begin(), seen.end());
        const bool brute = seen == members;
        CAPTURE(trial);
        CHECK(verdict == brute);
        valids += verdict ? 1 : 0;
    }
    CHECK(valids > 0); // the sample space is small enough to hit real cycles
}

TEST_CASE("verification enforces the enumeration cap") {
    ClassSpec spec;
    spec.name = "all_words";
    spec.word_length = 12;
    spec.alphabet_size = 3;
    spec.enumeration_cap = 100;
    WordClass cls = make_class(spec);
    CHECK_THROWS_AS(verify_ucycle(Word{0, 1, 2}, cls), CapExceededError);
}
