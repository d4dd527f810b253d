#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "word_class.hpp"
#include "words.hpp"

namespace ucycle {

// The cyclic length-n windows of s: window i reads s[i], s[i+1], ... with
// indices wrapping, giving |s| windows. Requires n >= 1 and a nonempty s.
std::vector<Word> windows(std::span<const Letter> s, int n);

enum class VerifyOutcome {
    Valid,
    LengthMismatch,   // |s| != |class|
    NonMemberWindow,  // some window is not in the class
    DuplicateWindow,  // two windows coincide
    Incomplete,       // some member never appears
};

const char* to_string(VerifyOutcome outcome);

struct VerificationResult {
    bool valid = false;
    VerifyOutcome outcome = VerifyOutcome::Valid;
    std::uint64_t expected_length = 0;
    std::uint64_t actual_length = 0;
    std::uint64_t window_index = 0; // offending window (second occurrence for duplicates)
    std::uint64_t first_index = 0;  // first occurrence for duplicates
    std::uint64_t missing_count = 0;
    Word window; // the offending window itself
};

// Certifies that s is a universal cycle for the class: every cyclic window
// is a member, no window repeats, and the length matches the class size.
// The class size is recomputed by enumeration, so the check is independent
// of whatever produced s. Windows are scanned in index order and the first
// defect wins; the length comparison runs only after a clean scan, so a
// doubled-up cycle is reported as a duplicate, not as a length problem.
VerificationResult verify_ucycle(std::span<const Letter> s, const WordClass& cls);

} // namespace ucycle
