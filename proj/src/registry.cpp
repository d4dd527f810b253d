#include "registry.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "counting.hpp"
#include "predicates.hpp"

namespace ucycle {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok)
        throw std::invalid_argument(message);
}

std::optional<std::uint64_t> difference(std::optional<std::uint64_t> whole,
                                        std::optional<std::uint64_t> part) {
    if (!whole || !part)
        return std::nullopt;
    return *whole - *part;
}

int distinct_letters(std::span<const Letter> word) {
    std::array<bool, 256> seen{};
    int total = 0;
    for (Letter x : word)
        if (!std::exchange(seen[x], true))
            ++total;
    return total;
}

// Existence verdicts. Length-1 words are decided directly: a universal
// cycle there is just an arrangement of the members, so only emptiness
// matters. Everything else follows the rules for the class.

TheoremVerdict all_words_verdict() {
    return {Existence::Exists,
            "a cycle through all k^n words exists for every n and k"};
}

TheoremVerdict injective_verdict(int n, int k) {
    if (n == 1)
        return {Existence::Exists, "single letters never repeat; any arrangement of the alphabet is a cycle"};
    if (n > k)
        return {Existence::NotExists, "more positions than letters forces a repeat; the class is empty"};
    if (k < 3)
        return {Existence::Unsettled, "injective words are settled here only for k >= 3"};
    if (k > n)
        return {Existence::Exists, "injective words admit a cycle whenever k > n >= 2 (for k >= 3)"};
    return {Existence::NotExists,
            "with n = k the class is the permutations of the alphabet, which split into disjoint cycles"};
}

TheoremVerdict noninjective_verdict(int n, int k) {
    if (n == 1)
        return {Existence::NotExists, "a single letter cannot repeat; the class is empty"};
    if (n == 2) {
        if (k == 1)
            return {Existence::Exists, "the one constant word is its own cycle"};
        return {Existence::NotExists, "for n = 2 the members are the k constant words, k disjoint loops"};
    }
    if (n >= 4)
        return {Existence::Exists, "words with a repeated letter admit a cycle for every n >= 4"};
    if (n > k)
        return {Existence::Exists,
                "with n > k every word repeats a letter, so the cycle through all words serves"};
    return {Existence::Unsettled, "n = 3 over three or more letters is not settled here"};
}

TheoremVerdict surjective_verdict(int n, int k) {
    if (n == 1) {
        if (k == 1)
            return {Existence::Exists, "the single word covers the whole alphabet"};
        return {Existence::NotExists, "one letter cannot cover k >= 2 letters; the class is empty"};
    }
    if (n < k)
        return {Existence::NotExists, "fewer positions than letters cannot cover the alphabet; the class is empty"};
    if (k < 3)
        return {Existence::Unsettled, "surjective words are settled here only for k >= 3"};
    if (n > k)
        return {Existence::Exists, "surjective words admit a cycle whenever n > k (for k >= 3)"};
    return {Existence::NotExists,
            "with n = k the class is the permutations of the alphabet, which split into disjoint cycles"};
}

TheoremVerdict nonsurjective_verdict(int n, int k) {
    if (k == 1)
        return {Existence::NotExists, "every word uses the only letter; the class is empty"};
    if (n < k)
        return {Existence::Exists,
                "with n < k every word misses a letter, so the cycle through all words serves"};
    if (k == 2)
        return {Existence::NotExists,
                "over two letters the members are the two constant words, two disjoint loops"};
    return {Existence::Exists, "words missing a letter admit a cycle for every n >= k >= 3"};
}

TheoremVerdict alternating_verdict(int n, int first_block, int second_block) {
    if (n == 1)
        return {Existence::Exists, "single letters alternate vacuously; any arrangement of the alphabet is a cycle"};
    if (n % 2 == 0)
        return {Existence::Exists, "alternating words admit a cycle for every even n"};
    if (first_block == second_block)
        return {Existence::Exists, "alternating words admit a cycle for odd n when the blocks have equal size"};
    return {Existence::NotExists,
            "for odd n with unequal blocks, windows starting and ending in different blocks are unbalanced"};
}

TheoremVerdict legal_ranking_verdict(int n) {
    if (n == 1)
        return {Existence::Exists, "the only ranking of one contestant is first place"};
    return {Existence::Unsettled, "no existence rule is bound for legal rankings; the digraph decides"};
}

TheoremVerdict illegal_ranking_verdict(int n) {
    if (n == 1)
        return {Existence::NotExists, "the only ranking of one contestant is legal; the class is empty"};
    if (n == 3)
        return {Existence::NotExists,
                "the rankings 112, 121 and 211 form a cycle separate from the other illegal rankings"};
    return {Existence::Exists, "illegal rankings admit a cycle for every n other than 1 and 3"};
}

TheoremVerdict password_verdict(int n, int blocks) {
    if (blocks == 1)
        return {Existence::Exists,
                "every word draws from the only category, so the class is all words"};
    if (n < blocks)
        return {Existence::NotExists, "fewer positions than categories leaves the class empty"};
    return {Existence::Unsettled, "no existence rule is bound for passwords; the digraph decides"};
}

TheoremVerdict nonpassword_verdict(int n, int blocks) {
    if (blocks == 1)
        return {Existence::NotExists, "no word can miss the only category; the class is empty"};
    if (n == 1)
        return {Existence::Exists,
                "a single letter misses some other category, so the class is all words"};
    if (blocks == 2)
        return {Existence::NotExists,
                "words confined to one of two categories form two separate components"};
    return {Existence::Exists, "words missing a category admit a cycle for three or more categories"};
}

struct Binding {
    Alphabet alphabet;
    WordClass::Predicate predicate;
    TheoremVerdict theorem;
    std::optional<std::uint64_t> closed_count;
    WordClass::DegreeRule degree_rule;
};

int resolve_k(const ClassSpec& spec, int implied, const char* what) {
    if (spec.alphabet_size && *spec.alphabet_size != implied)
        throw std::invalid_argument("alphabet size " + std::to_string(*spec.alphabet_size) +
                                    " conflicts with " + what + " (" + std::to_string(implied) + ")");
    return implied;
}

std::string pick_symbols(const ClassSpec& spec, int k, bool ranking) {
    if (!spec.symbols.empty())
        return spec.symbols;
    return ranking ? Alphabet::ranking_symbols(k) : Alphabet::default_symbols(k);
}

Binding bind_plain(const ClassSpec& spec) {
    require(spec.category_sizes.empty(), "class " + spec.name + " takes no category sizes");
    require(spec.alphabet_size.has_value(), "class " + spec.name + " needs the alphabet size");
    const int n = spec.word_length;
    const int k = *spec.alphabet_size;
    require(k >= 1, "alphabet size must be at least 1");
    Alphabet alphabet(k, pick_symbols(spec, k, false));
    const auto space = checked_pow(static_cast<std::uint64_t>(k), n);

    if (spec.name == "all_words")
        return {std::move(alphabet),
                [](std::span<const Letter>) { return true; },
                all_words_verdict(), space, nullptr};

    if (spec.name == "injective")
        return {std::move(alphabet),
                [](std::span<const Letter> w) { return is_injective(w); },
                injective_verdict(n, k), falling_factorial(k, n), nullptr};

    if (spec.name == "noninjective")
        return {std::move(alphabet),
                [](std::span<const Letter> w) { return is_noninjective(w); },
                noninjective_verdict(n, k),
                difference(space, falling_factorial(k, n)),
                [n, k](std::span<const Letter> v) -> std::optional<std::uint64_t> {
                    if (is_noninjective(v))
                        return static_cast<std::uint64_t>(k);
                    return static_cast<std::uint64_t>(n - 1);
                }};

    if (spec.name == "surjective")
        return {std::move(alphabet),
                [k](std::span<const Letter> w) { return is_surjective(w, k); },
                surjective_verdict(n, k), surjection_count(n, k), nullptr};

    if (spec.name == "nonsurjective")
        return {std::move(alphabet),
                [k](std::span<const Letter> w) { return is_nonsurjective(w, k); },
                nonsurjective_verdict(n, k),
                difference(space, surjection_count(n, k)),
                [k](std::span<const Letter> v) -> std::optional<std::uint64_t> {
                    const int missing = k - distinct_letters(v);
                    if (missing == 0)
                        return std::nullopt;
                    return static_cast<std::uint64_t>(missing == 1 ? k - 1 : k);
                }};

    throw std::invalid_argument("unknown class: " + spec.name);
}

Binding bind_ranking(const ClassSpec& spec) {
    require(spec.category_sizes.empty(), "class " + spec.name + " takes no category sizes");
    const int n = spec.word_length;
    const int k = resolve_k(spec, n, "the contestant count (rankings use k = n)");
    Alphabet alphabet(k, pick_symbols(spec, k, true));
    const auto legal = fubini_number(n);

    if (spec.name == "legal_ranking")
        return {std::move(alphabet),
                [k](std::span<const Letter> w) { return is_legal_ranking(w, k); },
                legal_ranking_verdict(n), legal, nullptr};

    return {std::move(alphabet),
            [k](std::span<const Letter> w) { return is_illegal_ranking(w, k); },
            illegal_ranking_verdict(n),
            difference(checked_pow(static_cast<std::uint64_t>(k), n), legal),
            [n, k](std::span<const Letter> v) -> std::optional<std::uint64_t> {
                Word probe(v.begin(), v.end());
                probe.push_back(0);
                int legal_extensions = 0;
                for (int x = 0; x < k; ++x) {
                    probe.back() = static_cast<Letter>(x);
                    if (is_legal_ranking(probe, k))
                        ++legal_extensions;
                }
                return static_cast<std::uint64_t>(n - legal_extensions);
            }};
}

Binding bind_alternating(const ClassSpec& spec) {
    require(spec.category_sizes.size() == 2,
            "class alternating needs exactly two category sizes");
    const int n = spec.word_length;
    const int s0 = spec.category_sizes[0];
    const int s1 = spec.category_sizes[1];
    CategoryPartition partition(spec.category_sizes);
    const int k = resolve_k(spec, partition.alphabet_size(), "the category sizes");
    Alphabet alphabet(k, pick_symbols(spec, k, false), partition);

    auto degree_rule = [n, s0, s1, partition](std::span<const Letter> v)
        -> std::optional<std::uint64_t> {
        if (!is_alternating(v, partition) || v.empty())
            return std::nullopt;
        if (n % 2 == 0) {
            // Windows of odd length start and end in the same block; the
            // degree is the size of the other block.
            return static_cast<std::uint64_t>(partition.block_of(v.front()) == 0 ? s1 : s0);
        }
        if (s0 != s1)
            return std::nullopt;
        return static_cast<std::uint64_t>(s0);
    };

    return {std::move(alphabet),
            [partition](std::span<const Letter> w) { return is_alternating(w, partition); },
            alternating_verdict(n, s0, s1),
            alternating_count(n, s0, s1),
            std::move(degree_rule)};
}

Binding bind_password(const ClassSpec& spec) {
    require(!spec.category_sizes.empty(),
            "class " + spec.name + " needs at least one category size");
    const int n = spec.word_length;
    CategoryPartition partition(spec.category_sizes);
    const int k = resolve_k(spec, partition.alphabet_size(), "the category sizes");
    const int blocks = partition.block_count();
    Alphabet alphabet(k, pick_symbols(spec, k, false), partition);
    const auto passwords = password_count(n, spec.category_sizes);

    if (spec.name == "password")
        return {std::move(alphabet),
                [partition](std::span<const Letter> w) { return is_password(w, partition); },
                password_verdict(n, blocks), passwords, nullptr};

    auto sizes = spec.category_sizes;
    return {std::move(alphabet),
            [partition](std::span<const Letter> w) { return is_nonpassword(w, partition); },
            nonpassword_verdict(n, blocks),
            difference(checked_pow(static_cast<std::uint64_t>(k), n), passwords),
            [k, partition, sizes](std::span<const Letter> v) -> std::optional<std::uint64_t> {
                std::vector<bool> hit(static_cast<std::size_t>(partition.block_count()), false);
                for (Letter x : v)
                    hit[static_cast<std::size_t>(partition.block_of(x))] = true;
                int missing = 0;
                int missing_size = 0;
                for (std::size_t b = 0; b < hit.size(); ++b)
                    if (!hit[b]) {
                        ++missing;
                        missing_size = sizes[b];
                    }
                if (missing == 0)
                    return std::nullopt;
                return static_cast<std::uint64_t>(missing == 1 ? k - missing_size : k);
            }};
}

} // namespace

WordClass make_class(const ClassSpec& spec) {
    require(spec.word_length >= 1, "word length must be at least 1");

    Binding bound = [&] {
        if (spec.name == "all_words" || spec.name == "injective" || spec.name == "noninjective" ||
            spec.name == "surjective" || spec.name == "nonsurjective")
            return bind_plain(spec);
        if (spec.name == "legal_ranking" || spec.name == "illegal_ranking")
            return bind_ranking(spec);
        if (spec.name == "alternating")
            return bind_alternating(spec);
        if (spec.name == "password" || spec.name == "nonpassword")
            return bind_password(spec);
        throw std::invalid_argument("unknown class: " + spec.name);
    }();

    return WordClass(spec.name, spec.word_length, std::move(bound.alphabet),
                     spec.enumeration_cap, std::move(bound.predicate), std::move(bound.theorem),
                     bound.closed_count, std::move(bound.degree_rule));
}

std::vector<std::string> registered_class_names() {
    return {"all_words",  "alternating",   "illegal_ranking", "injective",  "legal_ranking",
            "noninjective", "nonpassword", "nonsurjective",   "password",   "surjective"};
}

} // namespace ucycle
