#pragma once

#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Vertex-disjoint set of host-graph edges, stored as (a, b) pairs with a < b.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    int size() const { return (int)edges.size(); }
    bool covers(int v) const {
        for (auto [a, b] : edges)
            if (a == v || b == v) return true;
        return false;
    }
    /// Sorted list of all matched vertices.
    VertexSet vertices() const {
        VertexSet out;
        out.reserve(edges.size() * 2);
        for (auto [a, b] : edges) {
            out.push_back(a);
            out.push_back(b);
        }
        return set_sorted(std::move(out));
    }
};

/// Maximum matching (Edmonds' blossom algorithm, exact on general graphs).
Matching max_matching(const SimpleGraph& g);

/// Stops augmenting as soon as `target` edges are reached. If the result is
/// smaller than `target` it is a maximum matching.
Matching max_matching(const SimpleGraph& g, int target);

struct TutteWitness {
    Matching matching;  // maximum
    VertexSet s;
    std::vector<VertexSet> odd_components;  // odd-order components of g - s
};

/// Maximum matching plus a set S attaining the Tutte-Berge maximum of
/// o(G-S) - |S|; S is the neighbor set of the factor-critical part in the
/// Gallai-Edmonds decomposition. The equality
///   |matching| = (n - (o(G-S) - |S|)) / 2
/// is asserted before returning.
TutteWitness tutte_witness(const SimpleGraph& g);

struct HallWitness {
    Matching matching;  // maximum among x-y matchings
    VertexSet s;        // subset of x maximizing |S| - |N(S) ∩ Y|
};

/// Maximum bipartite matching between x and y (edges inside either side are
/// ignored) plus the Konig set S: x-vertices reachable by alternating paths
/// from unmatched x-vertices. The defect equality
///   |matching| = |X| - (|S| - |N(S) ∩ Y|)
/// is asserted before returning.
HallWitness hall_witness(const SimpleGraph& g, const VertexSet& x, const VertexSet& y);

/// Single greedy pass matching y-vertices to free x-neighbors.
/// Requires every vertex of y adjacent to at least |x|-1 vertices of x;
/// then the result has size >= min(|y|, |x|-1), which is asserted.
Matching greedy_near_complete_matching(const SimpleGraph& g, const VertexSet& x,
                                       const VertexSet& y);

}  // namespace ramsey
