#pragma once

#include <stdexcept>

namespace ucycle {

// The word space k^n is larger than the configured enumeration cap.
// Callers must refuse the operation; nothing ever truncates silently.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested operation is outside the model, e.g. a transition digraph
// for n = 1, where there are no (n-1)-letter windows to act as vertices.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An Euler circuit was requested from a digraph that fails the existence
// test (unbalanced vertex, split components, or no edges at all).
class NotEulerianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ucycle
