#pragma once

#include <cstdint>
#include <vector>

#include "alphabet.hpp"
#include "word_class.hpp"

namespace ucycle {

// Transition digraph of a word class: one vertex per (n-1)-letter window
// that occurs as a prefix or suffix of a member, one edge per member,
// running from its prefix window to its suffix window.
//
// Vertices are kept sorted by code, edges sorted by word code, which is
// the lexicographic order on both. Since the prefix is the high-order part
// of a word's code, edges are automatically grouped by source vertex, and
// out_begin indexes those groups CSR-style.
struct TransitionDigraph {
    int n = 0;
    int k = 0;
    Alphabet alphabet{1, "A"};

    std::vector<std::uint64_t> vertex_codes;
    std::vector<std::uint64_t> edge_words;
    std::vector<std::uint32_t> edge_from;
    std::vector<std::uint32_t> edge_to;
    std::vector<std::uint64_t> out_begin; // size vertex_count() + 1
    std::vector<std::uint64_t> in_degree;

    std::uint64_t vertex_count() const { return vertex_codes.size(); }
    std::uint64_t edge_count() const { return edge_words.size(); }
    std::uint64_t out_degree(std::uint64_t v) const { return out_begin[v + 1] - out_begin[v]; }

    Word vertex_word(std::uint64_t v) const { return decode_word(vertex_codes[v], n - 1, k); }
    Word edge_word(std::uint64_t e) const { return decode_word(edge_words[e], n, k); }
};

struct DegreeViolation {
    std::uint64_t vertex = 0; // index into vertex_codes
    std::uint64_t in_degree = 0;
    std::uint64_t out_degree = 0;
};

struct WeakComponents {
    // Components are numbered densely in order of their smallest vertex.
    std::vector<std::uint32_t> component_of;
    std::uint64_t component_count = 0;
    std::uint64_t nontrivial_count = 0; // components that contain an edge
};

// The balance-and-connectivity audit behind the existence answer: a
// universal cycle exists exactly when every vertex has in-degree equal to
// out-degree, all edges sit in one weakly connected component, and there
// is at least one edge.
struct ExistenceReport {
    bool eulerian = false;
    std::uint64_t edge_count = 0;
    std::uint64_t vertex_count = 0;
    std::vector<DegreeViolation> degree_violations;
    std::uint64_t nontrivial_components = 0;
};

// Requires n >= 2 (windows must be nonempty) and a word space under the
// class cap; otherwise throws UnsupportedError / CapExceededError.
TransitionDigraph build_digraph(const WordClass& cls);

// Vertices with in-degree != out-degree, ascending by vertex code.
std::vector<DegreeViolation> degree_audit(const TransitionDigraph& g);

WeakComponents weak_components(const TransitionDigraph& g);

ExistenceReport eulerian_check(const TransitionDigraph& g);

} // namespace ucycle
