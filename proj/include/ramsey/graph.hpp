#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

/// Undirected simple graph on vertices 0..n-1 with a dense bit-per-pair
/// adjacency matrix. O(1) edge lookup; rows are 64-bit words so neighborhood
/// intersections are word ops.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        require(n >= 0, "vertex count must be nonnegative");
    }

    int n() const { return n_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
        require(u != v, "self-loops are not allowed");
        row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
        row(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
    }

    void remove_edge(int u, int v) {
        require(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v, "bad edge");
        row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        row(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
    }

    int degree(int v) const {
        const std::uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(16);
        for_each_neighbor(v, [&](int u) { out.push_back(u); });
        return out;
    }

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    const std::uint64_t* row(int v) const { return bits_.data() + std::size_t(v) * words_; }
    std::uint64_t* row(int v) { return bits_.data() + std::size_t(v) * words_; }

    /// Count of common neighbors of u and v.
    int common_neighbors(int u, int v) const {
        const std::uint64_t *a = row(u), *b = row(v);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    bool operator==(const SimpleGraph& o) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Edge-uv-absent-iff-present flip; involution.
SimpleGraph complement(const SimpleGraph& g);

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> to_original;  // new index -> original vertex label
};

/// G[S] plus the index bijection so certificates can be mapped back.
InducedSubgraph induced(const SimpleGraph& g, const VertexSet& s);

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_letter(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// Total 2-edge-coloring of K_n. Stored as the red graph; blue is its
/// complement, so totality holds by construction.
class ColoredCompleteGraph {
public:
    ColoredCompleteGraph() = default;
    explicit ColoredCompleteGraph(int n, Color fill = Color::Blue) : red_(n) {
        if (fill == Color::Red)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) red_.add_edge(u, v);
    }
    static ColoredCompleteGraph from_red_graph(SimpleGraph red) {
        ColoredCompleteGraph c;
        c.red_ = std::move(red);
        return c;
    }

    int n() const { return red_.n(); }

    Color color(int u, int v) const {
        require(u != v, "pair must be two distinct vertices");
        return red_.has_edge(u, v) ? Color::Red : Color::Blue;
    }

    void set_color(int u, int v, Color c) {
        if (c == Color::Red)
            red_.add_edge(u, v);
        else {
            require(u >= 0 && u < n() && v >= 0 && v < n() && u != v, "bad pair");
            red_.remove_edge(u, v);
        }
    }

    int color_degree(int v, Color c) const {
        int red_deg = red_.degree(v);
        return c == Color::Red ? red_deg : n() - 1 - red_deg;
    }

    const SimpleGraph& red_graph() const { return red_; }

    bool operator==(const ColoredCompleteGraph& o) const = default;

private:
    SimpleGraph red_;
};

/// Graph whose edges are exactly the pairs colored `col`.
SimpleGraph color_subgraph(const ColoredCompleteGraph& c, Color col);

// Small helpers over sorted VertexSets.
bool set_contains(const VertexSet& s, int v);
VertexSet set_sorted(VertexSet s);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

}  // namespace ramsey
