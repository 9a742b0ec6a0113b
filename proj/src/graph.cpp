#include "ramsey/graph.hpp"

namespace ramsey {

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced(const SimpleGraph& g, const VertexSet& s) {
    for (int v : s) require(v >= 0 && v < g.n(), "induced: vertex out of range");
    VertexSet sorted = set_sorted(s);
    require(sorted.size() == s.size(), "induced: duplicate vertex");
    InducedSubgraph out;
    out.graph = SimpleGraph((int)sorted.size());
    out.to_original = sorted;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j])) out.graph.add_edge((int)i, (int)j);
    return out;
}

SimpleGraph color_subgraph(const ColoredCompleteGraph& c, Color col) {
    if (col == Color::Red) return c.red_graph();
    return complement(c.red_graph());
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_sorted(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace ramsey
