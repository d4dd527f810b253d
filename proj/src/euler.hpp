#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "word_class.hpp"

namespace ucycle {

// Euler circuit as a sequence of edge indices into the digraph. The walk is
// deterministic: it starts at the source of the smallest member word and
// always leaves a vertex along the smallest unused edge. Throws
// NotEulerianError when the digraph fails the existence audit.
std::vector<std::uint64_t> hierholzer(const TransitionDigraph& g);

struct UCycle {
    Word letters; // cyclic, one letter per edge of the circuit
    Word start_vertex;
    std::string class_name;
};

// Reads a cycle off a circuit: letter i is the first letter of the i-th
// edge's word. Validates that the circuit uses every edge exactly once and
// chains head to tail; throws std::invalid_argument otherwise.
UCycle emit_cycle(std::span<const std::uint64_t> circuit, const TransitionDigraph& g,
                  const WordClass& cls);

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const Letter> s);

Word rotate(std::span<const Letter> s, std::size_t shift);

} // namespace ucycle
