#include "ramsey/detect.hpp"

#include <numeric>

#include "ramsey/matching.hpp"

namespace ramsey {
namespace {

std::optional<FanCertificate> fan_at_impl(const SimpleGraph& g, int v, int n) {
    if (g.degree(v) < 2 * n) return std::nullopt;
    InducedSubgraph nb = induced(g, g.neighbors(v));
    Matching m = max_matching(nb.graph, n);
    if (m.size() < n) return std::nullopt;
    FanCertificate f;
    f.center = v;
    for (int i = 0; i < n; ++i) {
        auto [a, b] = m.edges[i];
        f.blades.push_back({nb.to_original[a], nb.to_original[b]});
    }
    return std::get<FanCertificate>(canonical(std::move(f)));
}

}  // namespace

std::optional<FanCertificate> find_fan_at(const SimpleGraph& g, int v, int n) {
    require(v >= 0 && v < g.n(), "find_fan_at: center out of range");
    require(n >= 1, "find_fan_at: n must be at least 1");
    return fan_at_impl(g, v, n);
}

std::optional<FanCertificate> find_fan_serial(const SimpleGraph& g, int n) {
    require(n >= 1, "find_fan: n must be at least 1");
    for (int v = 0; v < g.n(); ++v)
        if (auto f = fan_at_impl(g, v, n)) return f;
    return std::nullopt;
}

std::optional<FanCertificate> find_fan(const SimpleGraph& g, int n) {
    require(n >= 1, "find_fan: n must be at least 1");
    // Lowest successful center wins regardless of worker scheduling.
    int best = g.n();
#pragma omp parallel for schedule(dynamic, 4) shared(best)
    for (int v = 0; v < g.n(); ++v) {
        int cur;
#pragma omp atomic read
        cur = best;
        if (v > cur) continue;
        if (g.degree(v) < 2 * n) continue;
        InducedSubgraph nb = induced(g, g.neighbors(v));
        if (max_matching(nb.graph, n).size() >= n) {
#pragma omp critical(ramsey_find_fan)
            if (v < best) best = v;
        }
    }
    if (best == g.n()) return std::nullopt;
    return fan_at_impl(g, best, n);
}

std::pair<int, int> max_fan(const SimpleGraph& g) {
    int best_v = -1, best_nu = 0;
#pragma omp parallel
    {
        int local_v = -1, local_nu = 0;
#pragma omp for schedule(dynamic, 4) nowait
        for (int v = 0; v < g.n(); ++v) {
            InducedSubgraph nb = induced(g, g.neighbors(v));
            int nu = max_matching(nb.graph).size();
            if (nu > local_nu || (nu == local_nu && (local_v == -1 || v < local_v))) {
                local_nu = nu;
                local_v = v;
            }
        }
#pragma omp critical(ramsey_max_fan)
        {
            if (local_v != -1 &&
                (local_nu > best_nu || (local_nu == best_nu && (best_v == -1 || local_v < best_v)))) {
                best_nu = local_nu;
                best_v = local_v;
            }
        }
    }
    return {best_v, best_nu};
}

namespace {

// Tomita-style expansion: candidates greedily colored in index order, then
// processed from the highest color down; a branch is cut when the clique so
// far plus the candidate's color cannot reach the target.
struct CliqueSearch {
    const SimpleGraph& g;
    int target;
    std::vector<int> current;

    bool expand(const std::vector<int>& cands) {
        if ((int)current.size() == target) return true;
        if ((int)current.size() + (int)cands.size() < target) return false;

        std::vector<std::vector<int>> classes;
        std::vector<int> color(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int v = cands[i];
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = false;
                for (int u : classes[k])
                    if (g.has_edge(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
            color[i] = (int)k + 1;
        }
        std::vector<int> order(cands.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color[a] < color[b]; });

        for (int oi = (int)order.size() - 1; oi >= 0; --oi) {
            int idx = order[oi];
            int v = cands[idx];
            if ((int)current.size() + color[idx] < target) return false;
            std::vector<int> next;
            for (int oj = 0; oj < oi; ++oj) {
                int u = cands[order[oj]];
                if (g.has_edge(u, v)) next.push_back(u);
            }
            current.push_back(v);
            if ((int)current.size() == target || expand(next)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<CliqueCertificate> find_clique(const SimpleGraph& g, int m) {
    require(m >= 1, "find_clique: m must be at least 1");
    if (m > g.n()) return std::nullopt;
    if (m == 1) {
        CliqueCertificate c;
        c.members = {0};
        return c;
    }
    CliqueSearch cs{g, m, {}};
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    if (!cs.expand(all)) return std::nullopt;
    CliqueCertificate c;
    c.members = set_sorted(cs.current);
    guarantee(c.members.size() == (std::size_t)m, "clique search returned wrong size");
    return c;
}

std::optional<BookCertificate> find_book_at(const SimpleGraph& g, int u, int v, int n) {
    require(u >= 0 && u < g.n() && v >= 0 && v < g.n() && u != v,
            "find_book_at: spine out of range");
    require(n >= 1, "find_book_at: n must be at least 1");
    if (!g.has_edge(u, v)) return std::nullopt;
    if (g.common_neighbors(u, v) < n) return std::nullopt;
    BookCertificate b;
    b.spine = {std::min(u, v), std::max(u, v)};
    const std::uint64_t *ru = g.row(u), *rv = g.row(v);
    for (int w = 0; w < g.words_per_row() && (int)b.pages.size() < n; ++w) {
        std::uint64_t bits = ru[w] & rv[w];
        while (bits && (int)b.pages.size() < n) {
            b.pages.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return b;
}

std::optional<BookCertificate> find_book(const SimpleGraph& g, int n) {
    require(n >= 1, "find_book: n must be at least 1");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v))
                if (auto b = find_book_at(g, u, v, n)) return b;
    return std::nullopt;
}

std::optional<FanCertificate> find_mono_fan(const ColoredCompleteGraph& c, int n) {
    for (Color col : {Color::Red, Color::Blue}) {
        if (auto f = find_fan(color_subgraph(c, col), n)) {
            f->color = col;
            return f;
        }
    }
    return std::nullopt;
}

std::optional<CliqueCertificate> find_mono_clique(const ColoredCompleteGraph& c, int m) {
    for (Color col : {Color::Red, Color::Blue}) {
        if (auto k = find_clique(color_subgraph(c, col), m)) {
            k->color = col;
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace ramsey
