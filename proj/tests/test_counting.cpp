#include "doctest.h"

#include <algorithm>
#include <vector>

#include "counting.hpp"
#include "words.hpp"

using namespace ucycle;

namespace {

// Independent reference counts, each computed by walking the full word
// space with a characterization different from the production one.

std::uint64_t brute_count(int n, int k, bool (*keep)(const Word&, int)) {
    Word w(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 0;
    while (true) {
        if (keep(w, k))
            ++total;
        if (!next_word(std::span<Letter>(w), k))
            return total;
    }
}

bool covers_alphabet(const Word& w, int k) {
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (Letter x : w)
        seen[x] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Legality through the sorted profile: with 1-based ranks r1 <= ... <= rn,
// a competition ranking is exactly one where r1 = 1 and each ri either ties
// its predecessor or equals i.
bool sorted_profile_legal(const Word& w, int) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() != 0)
        return false;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] != sorted[i - 1] && sorted[i] != static_cast<Letter>(i))
            return false;
    return true;
}

} // namespace

TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK(checked_add(1, 2) == 3);
    CHECK_FALSE(checked_add(~std::uint64_t{0}, 1).has_value());
    CHECK(checked_mul(1u << 31, 2) == std::uint64_t{1} << 32);
    CHECK_FALSE(checked_mul(std::uint64_t{1} << 32, std::uint64_t{1} << 32).has_value());
    CHECK(checked_pow(2, 63) == std::uint64_t{1} << 63);
    CHECK_FALSE(checked_pow(2, 64).has_value());
    CHECK_FALSE(checked_pow(3, 41).has_value());
    CHECK(checked_pow(10, 0) == 1);
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(3, 3) == 6);
    CHECK(falling_factorial(7, 7) == 5040);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(4, 0) == 1);
    CHECK(falling_factorial(2, 5) == 0);
    CHECK(falling_factorial(0, 0) == 1);
}

TEST_CASE("surjection counts match a brute-force scan") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= 5; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const std::uint64_t brute = n == 0 ? (k == 0 ? 1 : 0) : brute_count(n, k, covers_alphabet);
            CHECK(surjection_count(n, k) == brute);
        }
    CHECK(surjection_count(0, 0) == 1);
    CHECK(surjection_count(3, 3) == 6);
    CHECK(surjection_count(4, 3) == 36);
}

TEST_CASE("fubini numbers count legal rankings") {
    CHECK(fubini_number(0) == 1);
    const std::uint64_t expected[] = {1, 3, 13, 75, 541};
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(fubini_number(n) == expected[n - 1]);
        CHECK(fubini_number(n) == brute_count(n, n, sorted_profile_legal));
    }
    CHECK(fubini_number(6) == 4683);
    CHECK(fubini_number(7) == 47293);
}

TEST_CASE("password counts match inclusion-exclusion against brute force") {
    struct Case {
        int n;
        std::vector<int> sizes;
    };
    const Case cases[] = {
        {3, {1, 1, 1}}, {4, {2, 1}}, {3, {2, 2, 1}}, {2, {1, 1, 1}}, {5, {2, 2}}, {1, {3}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        int k = 0;
        for (int s : c.sizes)
            k += s;
        // reference: scan all words, marking which blocks were drawn from
        Word w(static_cast<std::size_t>(c.n), 0);
        std::uint64_t brute = 0;
        while (true) {
            std::vector<bool> hit(c.sizes.size(), false);
            for (Letter x : w) {
                int block = 0;
                int upper = c.sizes[0];
                while (x >= upper)
                    upper += c.sizes[static_cast<std::size_t>(++block)];
                hit[static_cast<std::size_t>(block)] = true;
            }
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
                ++brute;
            if (!next_word(std::span<Letter>(w), k))
                break;
        }
        CHECK(password_count(c.n, c.sizes) == brute);
    }
    CHECK(password_count(2, {1, 1, 1}) == 0); // too short to cover three blocks
}

TEST_CASE("alternating counts match brute force") {
    for (int n = 1; n <= 5; ++n)
        for (int first = 1; first <= 3; ++first)
            for (int second = 1; second <= 2; ++second) {
                CAPTURE(n);
                CAPTURE(first);
                CAPTURE(second);
                const int k = first + second;
                Word w(static_cast<std::size_t>(n), 0);
                std::uint64_t brute = 0;
                while (true) {
                    bool ok = true;
                    for (std::size_t i = 1; i < w.size(); ++i) {
                        const bool a = w[i - 1] < first;
                        const bool b = w[i] < first;
                        if (a == b) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok)
                        ++brute;
                    if (!next_word(std::span<Letter>(w), k))
                        break;
                }
                CHECK(alternating_count(n, first, second) == brute);
            }
    CHECK(alternating_count(4, 2, 1) == 8);
    CHECK(alternating_count(1, 2, 3) == 5);
}
