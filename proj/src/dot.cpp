#include "dot.hpp"

namespace ucycle {

std::string to_dot(const TransitionDigraph& g, const std::string& graph_name) {
    std::string out;
    out += "digraph \"" + graph_name + "\" {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        out += "  \"" + g.alphabet.format(g.vertex_word(v)) + "\";\n";
    for (std::uint64_t e = 0; e < g.edge_count(); ++e) {
        out += "  \"" + g.alphabet.format(g.vertex_word(g.edge_from[e])) + "\" -> \"" +
               g.alphabet.format(g.vertex_word(g.edge_to[e])) + "\" [label=\"" +
               g.alphabet.format(g.edge_word(e)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ucycle
