#pragma once

#include <string>

#include "digraph.hpp"

namespace ucycle {

// Graphviz rendering of the digraph: one node per window, one labeled edge
// per member word, both in lexicographic order.
std::string to_dot(const TransitionDigraph& g, const std::string& graph_name);

} // namespace ucycle
