#include "euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "counting.hpp"
#include "errors.hpp"

namespace ucycle {

std::vector<std::uint64_t> hierholzer(const TransitionDigraph& g) {
    const auto report = eulerian_check(g);
    if (!report.eulerian)
        throw NotEulerianError("no Euler circuit: " + std::to_string(report.edge_count) +
                               " edges, " + std::to_string(report.degree_violations.size()) +
                               " unbalanced vertices, " +
                               std::to_string(report.nontrivial_components) +
                               " components with edges");

    // Iterative Hierholzer over the CSR adjacency. cursor[v] is the next
    // unused out-edge of v; edges leave each vertex in ascending word order,
    // and sub-tours get spliced where they were discovered, so the result
    // is fully determined by the graph.
    std::vector<std::uint64_t> cursor(g.out_begin.begin(), g.out_begin.end() - 1);
    constexpr std::uint64_t no_edge = ~std::uint64_t{0};

    std::vector<std::pair<std::uint32_t, std::uint64_t>> stack; // (vertex, edge walked in)
    stack.reserve(g.edge_count() + 1);
    stack.emplace_back(g.edge_from[0], no_edge);

    std::vector<std::uint64_t> circuit;
    circuit.reserve(g.edge_count());
    while (!stack.empty()) {
        const auto [v, arrived_by] = stack.back();
        if (cursor[v] < g.out_begin[v + 1]) {
            const std::uint64_t e = cursor[v]++;
            stack.emplace_back(g.edge_to[e], e);
        } else {
            stack.pop_back();
            if (arrived_by != no_edge)
                circuit.push_back(arrived_by);
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    if (circuit.size() != g.edge_count())
        throw std::logic_error("Euler walk missed edges despite a passing existence audit");
    return circuit;
}

UCycle emit_cycle(std::span<const std::uint64_t> circuit, const TransitionDigraph& g,
                  const WordClass& cls) {
    const std::uint64_t edges = g.edge_count();
    if (circuit.size() != edges || edges == 0)
        throw std::invalid_argument("circuit does not cover the digraph's edges");

    std::vector<bool> used(edges, false);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const std::uint64_t e = circuit[i];
        if (e >= edges || used[e])
            throw std::invalid_argument("circuit repeats or invents an edge");
        used[e] = true;
        const std::uint64_t next = circuit[(i + 1) % circuit.size()];
        if (g.edge_to[e] != g.edge_from[next])
            throw std::invalid_argument("circuit edges do not chain head to tail");
    }

    const std::uint64_t prefix_mod = *checked_pow(static_cast<std::uint64_t>(g.k), g.n - 1);
    UCycle cycle;
    cycle.class_name = cls.name();
    cycle.letters.reserve(circuit.size());
    for (std::uint64_t e : circuit)
        cycle.letters.push_back(static_cast<Letter>(g.edge_words[e] / prefix_mod));
    cycle.start_vertex = g.vertex_word(g.edge_from[circuit.front()]);
    return cycle;
}

std::size_t least_rotation(std::span<const Letter> s) {
    const std::size_t m = s.size();
    if (m == 0)
        return 0;
    std::size_t i = 0, j = 1, len = 0;
    while (i < m && j < m && len < m) {
        const Letter a = s[(i + len) % m];
        const Letter b = s[(j + len) % m];
        if (a == b) {
            ++len;
            continue;
        }
        if (a > b)
            i += len + 1;
        else
            j += len + 1;
        if (i == j)
            ++j;
        len = 0;
    }
    return std::min(i, j);
}

Word rotate(std::span<const Letter> s, std::size_t shift) {
    Word out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out.push_back(s[(shift + i) % s.size()]);
    return out;
}

} // namespace ucycle
