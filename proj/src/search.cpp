#include "ramsey/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <utility>
#include <vector>

#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

std::string TargetSpec::str() const {
    const char* k = kind == TargetKind::Fan      ? "fan"
                    : kind == TargetKind::Clique ? "clique"
                                                 : "matching";
    return std::string(k) + ":" + std::to_string(size);
}

TargetSpec parse_target(const std::string& text) {
    auto colon = text.find(':');
    require(colon != std::string::npos, "target must look like fan:<n>, clique:<m> or matching:<n>");
    std::string kind = text.substr(0, colon);
    std::string num = text.substr(colon + 1);
    TargetSpec t;
    if (kind == "fan") {
        t.kind = TargetKind::Fan;
    } else if (kind == "clique") {
        t.kind = TargetKind::Clique;
    } else if (kind == "matching") {
        t.kind = TargetKind::Matching;
    } else {
        throw InputError("unknown target kind '" + kind + "'");
    }
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            "target size must be a nonnegative integer");
    require(num.size() <= 7, "target size out of range");
    t.size = std::stoi(num);
    require(t.size >= 1, "target size must be at least 1");
    return t;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Arrow: return "arrow";
        case Verdict::Witness: return "witness";
        default: return "inconclusive";
    }
}

namespace {

using Mask = std::uint32_t;

int ctz(Mask m) { return std::countr_zero(m); }
int pop(Mask m) { return std::popcount(m); }

/// Decision: does the graph restricted to `mask` contain a matching of size k?
/// Branches on the lowest vertex of the mask (match it or drop it).
bool mask_matching(const Mask* adj, Mask mask, int k) {
    if (k <= 0) return true;
    if (pop(mask) < 2 * k) return false;
    int v = ctz(mask);
    Mask rest = mask & (mask - 1);
    Mask cand = adj[v] & rest;
    while (cand) {
        int u = ctz(cand);
        cand &= cand - 1;
        if (mask_matching(adj, rest & ~(Mask{1} << u), k - 1)) return true;
    }
    return mask_matching(adj, rest, k);
}

/// Decision: does `mask` contain a k-clique?
bool mask_clique(const Mask* adj, Mask mask, int k) {
    if (k <= 0) return true;
    if (pop(mask) < k) return false;
    int v = ctz(mask);
    Mask rest = mask & (mask - 1);
    if (mask_clique(adj, adj[v] & rest, k - 1)) return true;
    return mask_clique(adj, rest, k);
}

int greedy_matching_size(const Mask* adj, Mask support) {
    Mask free = support;
    int size = 0;
    while (free) {
        int v = ctz(free);
        free &= free - 1;
        Mask cand = adj[v] & free;
        if (cand) {
            free &= ~(Mask{1} << ctz(cand));
            ++size;
        }
    }
    return size;
}

constexpr int kMaxVerts = 32;

struct Engine {
    int n = 0;
    int n_edges = 0;
    std::vector<std::pair<int, int>> edges;  // lexicographic
    TargetSpec tgt[2];                       // [0]=red, [1]=blue
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<bool> witness_seen{false};
    bool cancel_on_witness = true;

    void note_nodes(std::uint64_t batch) {
        std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (budget != 0 && total > budget) out_of_budget.store(true, std::memory_order_relaxed);
    }
};

enum class Out { None, Witness, Budget };

struct Worker {
    Engine* eng;
    Mask adj[2][kMaxVerts] = {};
    std::vector<int> colors;  // colors[i] in {0,1} once assigned
    std::vector<int> best;    // completed witness coloring, if found
    std::uint64_t pending_nodes = 0;
    bool stopped = false;  // budget or cancellation seen

    explicit Worker(Engine* e) : eng(e), colors(e->n_edges, -1) {}

    ~Worker() {
        if (pending_nodes) eng->note_nodes(pending_nodes);
    }

    bool tick() {
        if (++pending_nodes >= 2048) {
            eng->note_nodes(pending_nodes);
            pending_nodes = 0;
        }
        if (eng->out_of_budget.load(std::memory_order_relaxed)) stopped = true;
        if (eng->cancel_on_witness && eng->witness_seen.load(std::memory_order_relaxed))
            stopped = true;
        return !stopped;
    }

    Mask support(int c) const {
        Mask s = 0;
        for (int x = 0; x < eng->n; ++x)
            if (adj[c][x]) s |= Mask{1} << x;
        return s;
    }

    /// Presence decision for target `c` right after edge (u, v) got color c.
    /// Relies on the invariant that the state before this edge was clean, so
    /// any new copy uses the edge.
    bool present_after(int c, int u, int v) const {
        const TargetSpec& t = eng->tgt[c];
        const Mask* a = adj[c];
        switch (t.kind) {
            case TargetKind::Fan: {
                Mask centers = (Mask{1} << u) | (Mask{1} << v) | (a[u] & a[v]);
                while (centers) {
                    int x = ctz(centers);
                    centers &= centers - 1;
                    if (pop(a[x]) >= 2 * t.size && mask_matching(a, a[x], t.size)) return true;
                }
                return false;
            }
            case TargetKind::Clique: {
                if (t.size <= 2) return true;  // the new edge alone
                return mask_clique(a, a[u] & a[v], t.size - 2);
            }
            case TargetKind::Matching: {
                Mask sup = support(c);
                int greedy = greedy_matching_size(a, sup);
                if (greedy >= t.size) return true;
                if (2 * greedy < t.size) return false;  // maximal matching bound
                return mask_matching(a, sup, t.size);
            }
        }
        return false;
    }

    /// Presence decision from scratch (used for the empty root state only;
    /// inside the tree the incremental form is exact).
    bool present_full(int c) const {
        const TargetSpec& t = eng->tgt[c];
        const Mask* a = adj[c];
        switch (t.kind) {
            case TargetKind::Fan: {
                for (int x = 0; x < eng->n; ++x)
                    if (pop(a[x]) >= 2 * t.size && mask_matching(a, a[x], t.size)) return true;
                return false;
            }
            case TargetKind::Clique: {
                Mask all = eng->n >= 32 ? ~Mask{0} : (Mask{1} << eng->n) - 1;
                return mask_clique(a, all, t.size);
            }
            case TargetKind::Matching: {
                Mask sup = support(c);
                if (greedy_matching_size(a, sup) >= t.size) return true;
                return mask_matching(a, sup, t.size);
            }
        }
        return false;
    }

    void set_edge(int ei, int c) {
        auto [u, v] = eng->edges[ei];
        colors[ei] = c;
        adj[c][u] |= Mask{1} << v;
        adj[c][v] |= Mask{1} << u;
    }

    void clear_edge(int ei, int c) {
        auto [u, v] = eng->edges[ei];
        colors[ei] = -1;
        adj[c][u] &= ~(Mask{1} << v);
        adj[c][v] &= ~(Mask{1} << u);
    }

    Out dfs(int ei) {
        if (!tick()) return Out::Budget;
        if (ei == eng->n_edges) {
            best = colors;
            return Out::Witness;
        }
        auto [u, v] = eng->edges[ei];
        Out agg = Out::None;
        for (int c = 0; c < 2; ++c) {
            set_edge(ei, c);
            if (!present_after(c, u, v)) {
                Out r = dfs(ei + 1);
                if (r == Out::Witness) return r;  // keep the edge colored
                if (r == Out::Budget) agg = Out::Budget;
            }
            clear_edge(ei, c);
        }
        return agg;
    }

    /// Installs a fixed prefix one edge at a time with the same pruning the
    /// tree applies. Returns false if the prefix already holds a target (the
    /// whole subtree is then settled and empty).
    bool load_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            int c = prefix[i];
            set_edge(static_cast<int>(i), c);
            auto [u, v] = eng->edges[i];
            if (present_after(c, u, v)) return false;
        }
        return true;
    }
};

std::vector<std::vector<int>> make_prefixes(int n, bool symmetric_targets, bool symmetry) {
    int row0 = n >= 2 ? n - 1 : 0;  // edges (0,1)..(0,n-1)
    int row1 = n >= 3 ? n - 2 : 0;  // edges (1,2)..(1,n-1)

    std::vector<std::vector<int>> heads;
    if (symmetry && row0 > 0) {
        // Up to relabeling, vertex 0's red neighbors may be taken as an
        // initial segment, so only sorted rows R^k B^(row0-k) are explored.
        // With equal targets a color swap is also free, so k covers at most
        // half the range.
        int kmin = symmetric_targets ? n / 2 : 0;  // ceil((n-1)/2) == n/2
        for (int k = row0; k >= kmin; --k) {
            std::vector<int> h(row0, 1);
            for (int i = 0; i < k; ++i) h[i] = 0;
            heads.push_back(std::move(h));
        }
    } else if (row0 > 0) {
        for (Mask bits = 0; bits < (Mask{1} << row0); ++bits) {
            std::vector<int> h(row0);
            for (int i = 0; i < row0; ++i) h[i] = (bits >> i) & 1;
            heads.push_back(std::move(h));
        }
    } else {
        heads.push_back({});
    }

    std::vector<std::vector<int>> prefixes;
    for (const auto& h : heads) {
        for (Mask bits = 0; bits < (Mask{1} << row1); ++bits) {
            std::vector<int> p = h;
            for (int i = 0; i < row1; ++i) p.push_back((bits >> i) & 1);
            prefixes.push_back(std::move(p));
        }
    }
    return prefixes;
}

void validate_witness(const ColoredCompleteGraph& w, const TargetSpec tgt[2]) {
    const Color cols[2] = {Color::Red, Color::Blue};
    for (int c = 0; c < 2; ++c) {
        SimpleGraph view = color_subgraph(w, cols[c]);
        bool present = false;
        switch (tgt[c].kind) {
            case TargetKind::Fan: present = find_fan(view, tgt[c].size).has_value(); break;
            case TargetKind::Clique: present = find_clique(view, tgt[c].size).has_value(); break;
            case TargetKind::Matching:
                present = static_cast<int>(max_matching(view, tgt[c].size).size()) >= tgt[c].size;
                break;
        }
        guarantee(!present, "search produced a witness that still holds a target");
    }
}

}  // namespace

SearchResult ramsey_check(TargetSpec red_target, TargetSpec blue_target, int n_vertices,
                          const SearchConfig& cfg) {
    require(red_target.size >= 1 && blue_target.size >= 1, "target size must be at least 1");
    require(n_vertices >= 0, "vertex count must be nonnegative");
    require(cfg.hard_cap >= 1, "hard cap must be at least 1");
    require(n_vertices < kMaxVerts, "search engine is limited to 31 vertices");
    require(n_vertices <= cfg.hard_cap,
            "vertex count " + std::to_string(n_vertices) + " exceeds the hard cap of " +
                std::to_string(cfg.hard_cap));

    auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.red_target = red_target;
    res.blue_target = blue_target;
    res.n_vertices = n_vertices;

    Engine eng;
    eng.n = n_vertices;
    eng.tgt[0] = red_target;
    eng.tgt[1] = blue_target;
    eng.budget = cfg.node_budget;
    eng.cancel_on_witness = !cfg.deterministic;
    for (int u = 0; u < n_vertices; ++u)
        for (int v = u + 1; v < n_vertices; ++v) eng.edges.emplace_back(u, v);
    eng.n_edges = static_cast<int>(eng.edges.size());

    {
        // A target that lives in the empty coloring (a 1-clique on a
        // nonempty vertex set) settles the question without any search.
        Worker probe(&eng);
        if (probe.present_full(0) || probe.present_full(1)) {
            res.verdict = Verdict::Arrow;
            res.stats.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            return res;
        }
    }

    bool symmetric_targets = red_target == blue_target;
    auto prefixes = make_prefixes(n_vertices, symmetric_targets, cfg.symmetry_breaking);
    int n_tasks = static_cast<int>(prefixes.size());

    std::vector<int> witness_colors;
    bool any_budget = false;

    if (cfg.deterministic) {
        for (int ti = 0; ti < n_tasks; ++ti) {
            Worker w(&eng);
            if (!w.load_prefix(prefixes[ti])) continue;
            Out r = w.dfs(static_cast<int>(prefixes[ti].size()));
            if (r == Out::Witness) {
                witness_colors = w.best;
                eng.witness_seen.store(true);
                break;
            }
            if (r == Out::Budget) any_budget = true;
            if (eng.out_of_budget.load()) break;
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (int ti = 0; ti < n_tasks; ++ti) {
            if (eng.witness_seen.load(std::memory_order_relaxed) ||
                eng.out_of_budget.load(std::memory_order_relaxed))
                continue;
            Worker w(&eng);
            if (!w.load_prefix(prefixes[ti])) continue;
            Out r = w.dfs(static_cast<int>(prefixes[ti].size()));
            if (r == Out::Witness) {
#pragma omp critical(ramsey_search_witness)
                {
                    if (witness_colors.empty()) witness_colors = w.best;
                }
                eng.witness_seen.store(true, std::memory_order_relaxed);
            } else if (r == Out::Budget) {
#pragma omp critical(ramsey_search_budget)
                any_budget = true;
            }
        }
    }

    res.stats.nodes = eng.nodes.load();
    if (eng.witness_seen.load() && !witness_colors.empty()) {
        ColoredCompleteGraph w(n_vertices, Color::Blue);
        for (int ei = 0; ei < eng.n_edges; ++ei) {
            auto [u, v] = eng.edges[ei];
            guarantee(witness_colors[ei] == 0 || witness_colors[ei] == 1,
                      "witness coloring left an edge unassigned");
            w.set_color(u, v, witness_colors[ei] == 0 ? Color::Red : Color::Blue);
        }
        validate_witness(w, eng.tgt);
        res.verdict = Verdict::Witness;
        res.witness = std::move(w);
    } else if (any_budget || eng.out_of_budget.load()) {
        res.verdict = Verdict::Inconclusive;
    } else {
        res.verdict = Verdict::Arrow;
    }
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace ramsey
