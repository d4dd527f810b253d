#include "counting.hpp"

#include <stdexcept>

namespace ucycle {

std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        return std::nullopt;
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("checked_pow: negative exponent");
    std::uint64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
        auto next = checked_mul(acc, base);
        if (!next)
            return std::nullopt;
        acc = *next;
    }
    return acc;
}

std::optional<std::uint64_t> falling_factorial(int k, int n) {
    if (k < 0 || n < 0)
        throw std::invalid_argument("falling_factorial: negative argument");
    if (n > k)
        return 0;
    std::uint64_t acc = 1;
    for (int i = 0; i < n; ++i) {
        auto next = checked_mul(acc, static_cast<std::uint64_t>(k - i));
        if (!next)
            return std::nullopt;
        acc = *next;
    }
    return acc;
}

std::optional<std::uint64_t> surjection_count(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("surjection_count: negative argument");
    // sur(i, j) = j * (sur(i-1, j-1) + sur(i-1, j)): the last position either
    // covers a fresh letter or repeats one already present.
    std::vector<std::optional<std::uint64_t>> row(static_cast<std::size_t>(k) + 1, std::uint64_t{0});
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::optional<std::uint64_t>> next(static_cast<std::size_t>(k) + 1, std::uint64_t{0});
        next[0] = 0;
        for (int j = 1; j <= k; ++j) {
            const auto& a = row[static_cast<std::size_t>(j - 1)];
            const auto& b = row[static_cast<std::size_t>(j)];
            if (!a || !b) {
                next[static_cast<std::size_t>(j)] = std::nullopt;
                continue;
            }
            auto sum = checked_add(*a, *b);
            next[static_cast<std::size_t>(j)] =
                sum ? checked_mul(static_cast<std::uint64_t>(j), *sum) : std::nullopt;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

std::optional<std::uint64_t> fubini_number(int n) {
    if (n < 0)
        throw std::invalid_argument("fubini_number: negative argument");
    // f(m) = sum over the size i of the block of front-runners: C(m, i) * f(m - i).
    std::vector<std::optional<std::uint64_t>> f(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::uint64_t>> choose(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        choose[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        choose[static_cast<std::size_t>(m)][0] = 1;
        for (int i = 1; i <= m; ++i) {
            std::uint64_t above = choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i - 1)];
            std::uint64_t left = i <= m - 1 ? choose[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i)] : 0;
            auto sum = checked_add(above, left);
            if (!sum)
                return std::nullopt;
            choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] = *sum;
        }
    }
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::optional<std::uint64_t> acc = 0;
        for (int i = 1; i <= m && acc; ++i) {
            const auto& tail = f[static_cast<std::size_t>(m - i)];
            if (!tail) {
                acc = std::nullopt;
                break;
            }
            auto term = checked_mul(choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)], *tail);
            acc = term ? checked_add(*acc, *term) : std::nullopt;
        }
        f[static_cast<std::size_t>(m)] = acc;
    }
    return f[static_cast<std::size_t>(n)];
}

std::optional<std::uint64_t> password_count(int n, const std::vector<int>& block_sizes) {
    if (n < 0)
        throw std::invalid_argument("password_count: negative length");
    if (block_sizes.empty())
        throw std::invalid_argument("password_count: no blocks");
    const int blocks = static_cast<int>(block_sizes.size());
    if (blocks > 20)
        return std::nullopt;
    int k = 0;
    for (int s : block_sizes) {
        if (s < 1)
            throw std::invalid_argument("password_count: block sizes must be positive");
        k += s;
    }
    if (!checked_pow(static_cast<std::uint64_t>(k), n))
        return std::nullopt;
    // Inclusion-exclusion over the set of blocks forced to be absent. Partial
    // sums can dip negative, so accumulate in a wider signed type.
    __int128 total = 0;
    for (std::uint32_t mask = 0; mask < (1u << blocks); ++mask) {
        int remaining = k;
        int bits = 0;
        for (int b = 0; b < blocks; ++b)
            if (mask & (1u << b)) {
                remaining -= block_sizes[static_cast<std::size_t>(b)];
                ++bits;
            }
        __int128 term = 1;
        for (int i = 0; i < n; ++i)
            term *= remaining;
        total += (bits % 2 == 0) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

std::optional<std::uint64_t> alternating_count(int n, int first_block, int second_block) {
    if (n < 1)
        throw std::invalid_argument("alternating_count: length must be positive");
    if (first_block < 1 || second_block < 1)
        throw std::invalid_argument("alternating_count: block sizes must be positive");
    const int longer = (n + 1) / 2;
    const int shorter = n / 2;
    auto a1 = checked_pow(static_cast<std::uint64_t>(first_block), longer);
    auto a2 = checked_pow(static_cast<std::uint64_t>(second_block), shorter);
    auto b1 = checked_pow(static_cast<std::uint64_t>(second_block), longer);
    auto b2 = checked_pow(static_cast<std::uint64_t>(first_block), shorter);
    if (!a1 || !a2 || !b1 || !b2)
        return std::nullopt;
    auto lhs = checked_mul(*a1, *a2);
    auto rhs = checked_mul(*b1, *b2);
    if (!lhs || !rhs)
        return std::nullopt;
    return checked_add(*lhs, *rhs);
}

} // namespace ucycle
