#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "word_class.hpp"

namespace ucycle {

// Parameters for binding a registered class. The alphabet size may be left
// empty where the class implies it: rankings use k = n, and the category
// classes use the sum of the block sizes.
struct ClassSpec {
    std::string name;
    int word_length = 0;
    std::optional<int> alphabet_size;
    std::vector<int> category_sizes;
    std::string symbols;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Binds a registered class name to a ready-to-use WordClass. Throws
// std::invalid_argument for unknown names or inconsistent parameters.
WordClass make_class(const ClassSpec& spec);

// Names make_class accepts, alphabetically.
std::vector<std::string> registered_class_names();

} // namespace ucycle
