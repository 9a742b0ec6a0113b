#include "ramsey/matching.hpp"

#include <functional>
#include <limits>
#include <numeric>

namespace ramsey {
namespace {

// Edmonds' blossom algorithm over the dense adjacency rows. grow() builds an
// alternating forest from the given exposed roots, contracting blossoms as it
// goes; with one root per call it augments the matching, and a final
// multi-root call on a maximum matching labels the Gallai-Edmonds set D as
// the outer vertices.
struct BlossomSolver {
    const SimpleGraph& g;
    int n;
    std::vector<int> match, p, base, root_of, q;
    std::vector<char> outer, blossom, lca_mark, is_root;

    explicit BlossomSolver(const SimpleGraph& gg)
        : g(gg),
          n(gg.n()),
          match(n, -1),
          p(n, -1),
          base(n),
          root_of(n, -1),
          outer(n, 0),
          blossom(n, 0),
          lca_mark(n, 0),
          is_root(n, 0) {}

    int lca(int a, int b) {
        std::fill(lca_mark.begin(), lca_mark.end(), 0);
        for (;;) {
            a = base[a];
            lca_mark[a] = 1;
            if (match[a] == -1) break;  // reached the tree root
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (lca_mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    /// Grows the forest; returns an exposed vertex that ends an augmenting
    /// path, or -1 when none exists from these roots.
    int grow(const std::vector<int>& roots) {
        std::fill(outer.begin(), outer.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        std::fill(is_root.begin(), is_root.end(), 0);
        std::iota(base.begin(), base.end(), 0);
        q.clear();
        for (int r : roots) {
            outer[r] = 1;
            is_root[r] = 1;
            root_of[r] = r;
            q.push_back(r);
        }
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                bool to_outer = is_root[to] || (match[to] != -1 && p[match[to]] != -1);
                if (to_outer) {
                    // Outer-outer edge across trees would be an augmenting
                    // path; possible only between two exposed roots, which
                    // the caller rules out in the final phase.
                    guarantee(root_of[base[to]] == root_of[base[v]],
                              "augmenting path between forest roots in final phase");
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!outer[i]) {
                                outer[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    root_of[to] = root_of[base[v]];
                    if (match[to] == -1) return to;  // augmenting path found
                    int w = match[to];
                    outer[w] = 1;
                    root_of[w] = root_of[base[v]];
                    q.push_back(w);
                }
            }
        }
        return -1;
    }

    void augment(int to) {
        while (to != -1) {
            int pv = p[to], ppv = match[pv];
            match[to] = pv;
            match[pv] = to;
            to = ppv;
        }
    }

    int solve(int target) {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to : g.neighbors(v))
                if (match[to] == -1) {
                    match[v] = to;
                    match[to] = v;
                    ++size;
                    break;
                }
        }
        for (int v = 0; v < n && size < target; ++v) {
            if (match[v] != -1) continue;
            int end = grow({v});
            if (end != -1) {
                augment(end);
                ++size;
            }
        }
        return size;
    }

    /// Requires a maximum matching. Marks D = vertices missed by some
    /// maximum matching as outer[].
    void gallai_edmonds_phase() {
        std::vector<int> roots;
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) roots.push_back(v);
        if (roots.empty()) {
            std::fill(outer.begin(), outer.end(), 0);
            return;
        }
        int end = grow(roots);
        guarantee(end == -1, "augmenting path found in Gallai-Edmonds phase");
    }

    Matching extract() const {
        Matching m;
        for (int v = 0; v < n; ++v)
            if (match[v] > v) m.edges.push_back({v, match[v]});
        return m;
    }
};

}  // namespace

Matching max_matching(const SimpleGraph& g) {
    return max_matching(g, std::numeric_limits<int>::max());
}

Matching max_matching(const SimpleGraph& g, int target) {
    BlossomSolver bs(g);
    bs.solve(target);
    return bs.extract();
}

TutteWitness tutte_witness(const SimpleGraph& g) {
    int n = g.n();
    BlossomSolver bs(g);
    bs.solve(std::numeric_limits<int>::max());
    bs.gallai_edmonds_phase();

    TutteWitness w;
    w.matching = bs.extract();

    std::vector<char> in_s(n, 0);
    for (int v = 0; v < n; ++v)
        if (bs.outer[v])
            g.for_each_neighbor(v, [&](int u) {
                if (!bs.outer[u]) in_s[u] = 1;
            });
    for (int v = 0; v < n; ++v)
        if (in_s[v]) w.s.push_back(v);

    // Components of g - s; keep the odd ones.
    std::vector<int> comp(n, -1);
    int odd = 0;
    for (int v = 0; v < n; ++v) {
        if (in_s[v] || comp[v] != -1) continue;
        VertexSet members;
        std::vector<int> stack{v};
        comp[v] = v;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            g.for_each_neighbor(u, [&](int t) {
                if (!in_s[t] && comp[t] == -1) {
                    comp[t] = v;
                    stack.push_back(t);
                }
            });
        }
        if (members.size() % 2 == 1) {
            ++odd;
            w.odd_components.push_back(set_sorted(std::move(members)));
        }
    }

    guarantee(2 * w.matching.size() == n - (odd - (int)w.s.size()),
              "Tutte-Berge equality violated");
    return w;
}

HallWitness hall_witness(const SimpleGraph& g, const VertexSet& x, const VertexSet& y) {
    VertexSet xs = set_sorted(x), ys = set_sorted(y);
    require(xs.size() == x.size() && ys.size() == y.size(), "hall_witness: duplicate vertices");
    require(set_intersection(xs, ys).empty(), "hall_witness: x and y overlap");
    for (int v : xs) require(v >= 0 && v < g.n(), "hall_witness: x vertex out of range");
    for (int v : ys) require(v >= 0 && v < g.n(), "hall_witness: y vertex out of range");

    int nx = (int)xs.size(), ny = (int)ys.size();
    std::vector<std::vector<int>> adj(nx);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (g.has_edge(xs[i], ys[j])) adj[i].push_back(j);

    std::vector<int> match_y(ny, -1);
    std::vector<char> tried(ny, 0);
    std::function<bool(int)> try_augment = [&](int i) -> bool {
        for (int j : adj[i]) {
            if (tried[j]) continue;
            tried[j] = 1;
            if (match_y[j] == -1 || try_augment(match_y[j])) {
                match_y[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < nx; ++i) {
        std::fill(tried.begin(), tried.end(), 0);
        try_augment(i);
    }

    std::vector<int> match_x(nx, -1);
    for (int j = 0; j < ny; ++j)
        if (match_y[j] != -1) match_x[match_y[j]] = j;

    // Konig set: alternating BFS from unmatched x-vertices.
    std::vector<char> x_mark(nx, 0), y_mark(ny, 0);
    std::vector<int> queue;
    for (int i = 0; i < nx; ++i)
        if (match_x[i] == -1) {
            x_mark[i] = 1;
            queue.push_back(i);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int i = queue[qi];
        for (int j : adj[i]) {
            if (y_mark[j]) continue;
            y_mark[j] = 1;
            guarantee(match_y[j] != -1, "unmatched y reachable: matching not maximum");
            if (!x_mark[match_y[j]]) {
                x_mark[match_y[j]] = 1;
                queue.push_back(match_y[j]);
            }
        }
    }

    HallWitness w;
    int msize = 0;
    for (int i = 0; i < nx; ++i)
        if (match_x[i] != -1) {
            int a = xs[i], b = ys[match_x[i]];
            w.matching.edges.push_back({std::min(a, b), std::max(a, b)});
            ++msize;
        }
    int s_size = 0, ns_size = 0;
    for (int i = 0; i < nx; ++i)
        if (x_mark[i]) {
            w.s.push_back(xs[i]);
            ++s_size;
        }
    for (int j = 0; j < ny; ++j)
        if (y_mark[j]) ++ns_size;

    guarantee(msize == nx - (s_size - ns_size), "Konig defect equality violated");
    return w;
}

Matching greedy_near_complete_matching(const SimpleGraph& g, const VertexSet& x,
                                       const VertexSet& y) {
    VertexSet xs = set_sorted(x), ys = set_sorted(y);
    require(xs.size() == x.size() && ys.size() == y.size(),
            "greedy_near_complete_matching: duplicate vertices");
    require(set_intersection(xs, ys).empty(), "greedy_near_complete_matching: x and y overlap");
    for (int v : ys) {
        int deg = 0;
        for (int u : xs)
            if (g.has_edge(u, v)) ++deg;
        require(deg >= (int)xs.size() - 1,
                "greedy_near_complete_matching: a y-vertex misses two or more x-vertices");
    }

    Matching m;
    std::vector<char> used(xs.size(), 0);
    for (int v : ys) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (used[i] || !g.has_edge(xs[i], v)) continue;
            used[i] = 1;
            m.edges.push_back({std::min(xs[i], v), std::max(xs[i], v)});
            break;
        }
    }
    guarantee(m.size() >= std::min((int)ys.size(), (int)xs.size() - 1),
              "greedy matching fell short of min(|Y|, |X|-1)");
    return m;
}

}  // namespace ramsey
