#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ucycle {

// Checked 64-bit arithmetic: every helper returns nullopt instead of
// wrapping, and the count functions below propagate that, so an overflowed
// closed form can never masquerade as a real count.

std::optional<std::uint64_t> checked_add(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp);

// k (k-1) ... (k-n+1); zero when n > k.
std::optional<std::uint64_t> falling_factorial(int k, int n);

// Number of onto maps from n positions to k letters.
std::optional<std::uint64_t> surjection_count(int n, int k);

// Ordered Bell number: ways to rank n contestants with ties allowed, which
// is exactly the number of legal competition rankings.
std::optional<std::uint64_t> fubini_number(int n);

// Words of length n that draw at least one letter from every block.
std::optional<std::uint64_t> password_count(int n, const std::vector<int>& block_sizes);

// Words of length n whose letters alternate between the two blocks,
// starting with either one.
std::optional<std::uint64_t> alternating_count(int n, int first_block, int second_block);

} // namespace ucycle
