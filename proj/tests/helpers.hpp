#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace testutil {

using ramsey::Color;
using ramsey::ColoredCompleteGraph;
using ramsey::SimpleGraph;

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

inline SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Star with the center at vertex 0.
inline SimpleGraph star_graph(int leaves) {
    SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        int a = i, b = (i + 1) % 5;
        g.add_edge(std::min(a, b), std::max(a, b));
        int c = 5 + i, d = 5 + (i + 2) % 5;
        g.add_edge(std::min(c, d), std::max(c, d));
        g.add_edge(i, i + 5);
    }
    return g;
}

inline SimpleGraph random_graph(int n, std::uint64_t seed, double p = 0.5) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline ColoredCompleteGraph random_2coloring(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ColoredCompleteGraph c(n, Color::Blue);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) c.set_color(u, v, Color::Red);
    return c;
}

/// Exhaustive maximum clique size by subset recursion; test-local ground
/// truth, independent of both the library detector and its 12-vertex oracle.
inline int brute_max_clique(const SimpleGraph& g) {
    int n = g.n();
    int best = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) > best) best = static_cast<int>(chosen.size());
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!g.has_edge(std::min(u, v), std::max(u, v))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace testutil
