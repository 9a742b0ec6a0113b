#include "ramsey/oracle.hpp"

namespace ramsey {
namespace {

constexpr int kOracleCap = 12;

void check_cap(const SimpleGraph& g) {
    require(g.n() <= kOracleCap, "oracle: graph exceeds the 12-vertex cap");
}

// Largest matching among vertices of `mask`, trying every choice for the
// lowest free vertex (skip it, or pair it with any free neighbor).
int best_matching(const SimpleGraph& g, unsigned mask, int have) {
    int v = -1;
    for (int i = 0; i < g.n(); ++i)
        if (mask & (1u << i)) {
            v = i;
            break;
        }
    if (v == -1) return have;
    unsigned rest = mask & ~(1u << v);
    int best = best_matching(g, rest, have);
    for (int u = v + 1; u < g.n(); ++u)
        if ((rest & (1u << u)) && g.has_edge(u, v))
            best = std::max(best, best_matching(g, rest & ~(1u << u), have + 1));
    return best;
}

}  // namespace

int oracle_max_matching(const SimpleGraph& g) {
    check_cap(g);
    unsigned all = g.n() == 32 ? 0xffffffffu : (1u << g.n()) - 1;
    return best_matching(g, all, 0);
}

int oracle_fan_at(const SimpleGraph& g, int v) {
    check_cap(g);
    require(v >= 0 && v < g.n(), "oracle_fan_at: vertex out of range");
    unsigned nb = 0;
    for (int u = 0; u < g.n(); ++u)
        if (g.has_edge(u, v)) nb |= 1u << u;
    return best_matching(g, nb, 0);
}

bool oracle_fan(const SimpleGraph& g, int n) {
    check_cap(g);
    require(n >= 1, "oracle_fan: n must be at least 1");
    for (int v = 0; v < g.n(); ++v)
        if (oracle_fan_at(g, v) >= n) return true;
    return false;
}

namespace {

bool clique_from(const SimpleGraph& g, unsigned chosen, int lowest, int need) {
    if (need == 0) return true;
    for (int v = lowest; v < g.n(); ++v) {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            if ((chosen & (1u << u)) && !g.has_edge(u, v)) ok = false;
        if (ok && clique_from(g, chosen | (1u << v), v + 1, need - 1)) return true;
    }
    return false;
}

}  // namespace

bool oracle_clique(const SimpleGraph& g, int m) {
    check_cap(g);
    require(m >= 1, "oracle_clique: m must be at least 1");
    if (m > g.n()) return false;
    return clique_from(g, 0, 0, m);
}

}  // namespace ramsey
