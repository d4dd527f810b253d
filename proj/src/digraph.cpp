#include "digraph.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace ucycle {

namespace {

std::uint32_t vertex_index(const std::vector<std::uint64_t>& codes, std::uint64_t code) {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    return static_cast<std::uint32_t>(it - codes.begin());
}

// Plain union-find over vertex indices, path-halving, union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t size) : parent_(size), size_(size, 1) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

} // namespace

TransitionDigraph build_digraph(const WordClass& cls) {
    const int n = cls.word_length();
    if (n < 2)
        throw UnsupportedError("class " + cls.name() +
                               ": the transition digraph needs n >= 2, since vertices are "
                               "(n-1)-letter windows");
    cls.require_under_cap();

    const int k = cls.alphabet_size();
    const std::uint64_t suffix_mod = *cls.word_space_size() / static_cast<std::uint64_t>(k);

    TransitionDigraph g;
    g.n = n;
    g.k = k;
    g.alphabet = cls.alphabet();

    if (auto closed = cls.closed_count())
        g.edge_words.reserve(*closed);
    for_each_member(cls, [&](std::span<const Letter>, std::uint64_t code) {
        g.edge_words.push_back(code);
        return true;
    });

    g.vertex_codes.reserve(g.edge_words.size() * 2);
    for (std::uint64_t code : g.edge_words) {
        g.vertex_codes.push_back(code / static_cast<std::uint64_t>(k));
        g.vertex_codes.push_back(code % suffix_mod);
    }
    std::sort(g.vertex_codes.begin(), g.vertex_codes.end());
    g.vertex_codes.erase(std::unique(g.vertex_codes.begin(), g.vertex_codes.end()),
                         g.vertex_codes.end());

    const std::uint64_t vertices = g.vertex_count();
    g.edge_from.reserve(g.edge_words.size());
    g.edge_to.reserve(g.edge_words.size());
    g.in_degree.assign(vertices, 0);
    for (std::uint64_t code : g.edge_words) {
        const std::uint32_t from = vertex_index(g.vertex_codes, code / static_cast<std::uint64_t>(k));
        const std::uint32_t to = vertex_index(g.vertex_codes, code % suffix_mod);
        g.edge_from.push_back(from);
        g.edge_to.push_back(to);
        ++g.in_degree[to];
    }

    // edge_words is sorted, and the prefix is the high-order part of the
    // code, so edge_from is already non-decreasing.
    g.out_begin.assign(vertices + 1, 0);
    for (std::uint32_t from : g.edge_from)
        ++g.out_begin[from + 1];
    for (std::uint64_t v = 0; v < vertices; ++v)
        g.out_begin[v + 1] += g.out_begin[v];

    return g;
}

std::vector<DegreeViolation> degree_audit(const TransitionDigraph& g) {
    std::vector<DegreeViolation> violations;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
        const std::uint64_t in = g.in_degree[v];
        const std::uint64_t out = g.out_degree(v);
        if (in != out)
            violations.push_back({v, in, out});
    }
    return violations;
}

WeakComponents weak_components(const TransitionDigraph& g) {
    const std::uint64_t vertices = g.vertex_count();
    DisjointSets sets(vertices);
    for (std::uint64_t e = 0; e < g.edge_count(); ++e)
        sets.unite(g.edge_from[e], g.edge_to[e]);

    WeakComponents result;
    result.component_of.assign(vertices, 0);
    constexpr std::uint32_t unassigned = ~std::uint32_t{0};
    std::vector<std::uint32_t> label(vertices, unassigned);
    std::uint32_t next = 0;
    for (std::uint64_t v = 0; v < vertices; ++v) {
        const std::uint32_t root = sets.find(static_cast<std::uint32_t>(v));
        if (label[root] == unassigned)
            label[root] = next++;
        result.component_of[v] = label[root];
    }
    result.component_count = next;

    std::vector<bool> has_edge(next, false);
    for (std::uint64_t e = 0; e < g.edge_count(); ++e)
        has_edge[result.component_of[g.edge_from[e]]] = true;
    result.nontrivial_count =
        static_cast<std::uint64_t>(std::count(has_edge.begin(), has_edge.end(), true));
    return result;
}

ExistenceReport eulerian_check(const TransitionDigraph& g) {
    ExistenceReport report;
    report.edge_count = g.edge_count();
    report.vertex_count = g.vertex_count();
    report.degree_violations = degree_audit(g);
    report.nontrivial_components = weak_components(g).nontrivial_count;
    report.eulerian = report.edge_count >= 1 && report.degree_violations.empty() &&
                      report.nontrivial_components <= 1;
    return report;
}

} // namespace ucycle
