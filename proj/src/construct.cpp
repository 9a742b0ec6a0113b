#include "ramsey/construct.hpp"

#include "ramsey/detect.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

const VertexSet& ConstructionReport::block(const std::string& name) const {
    for (const auto& [label, members] : labels)
        if (label == name) return members;
    throw InputError("no such block: " + name);
}

int largest_even_below(long long num, long long den) {
    require(num > 0 && den > 0, "largest_even_below: arguments must be positive");
    long long k = (num % den == 0) ? num / den - 1 : num / den;
    if (k % 2 != 0) --k;
    return (int)k;
}

SimpleGraph regular_bipartite(int half, int r) {
    require(half >= 0, "regular_bipartite: half must be nonnegative");
    require(r >= 0 && r <= half, "regular_bipartite: need 0 <= r <= half");
    SimpleGraph g(2 * half);
    for (int i = 0; i < half; ++i)
        for (int k = 0; k < r; ++k) g.add_edge(i, half + (i + k) % half);
    return g;
}

namespace {

void attest(ConstructionReport& rep, const std::string& claim, bool pass) {
    rep.attestations.push_back({claim, pass});
    guarantee(pass, "attestation failed: " + claim);
}

VertexSet range_set(int lo, int hi) {
    VertexSet out;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

// Three t-cliques V_1..V_3 with an r-regular circulant from X_i (first half
// of V_i) to Y_{i+1} (second half of V_{i+1}, cyclically).
ConstructionReport three_clique_gadget(int t, int r) {
    int half = t / 2;
    guarantee(r <= half, "cross-regularity exceeds block half");
    ConstructionReport rep;
    rep.graph = SimpleGraph(3 * t);
    for (int i = 0; i < 3; ++i) {
        int base = i * t;
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) rep.graph.add_edge(base + a, base + b);
        rep.labels.push_back({"V_" + std::to_string(i + 1), range_set(base, base + t)});
    }
    for (int i = 0; i < 3; ++i) {
        rep.labels.push_back({"X_" + std::to_string(i + 1), range_set(i * t, i * t + half)});
        rep.labels.push_back({"Y_" + std::to_string(i + 1), range_set(i * t + half, (i + 1) * t)});
    }
    for (int i = 0; i < 3; ++i) {
        int xbase = i * t;
        int ybase = ((i + 1) % 3) * t + half;
        for (int j = 0; j < half; ++j)
            for (int k = 0; k < r; ++k) rep.graph.add_edge(xbase + j, ybase + (j + k) % half);
    }
    return rep;
}

}  // namespace

ConstructionReport build_symmetric_lower_bound(int n) {
    require(n >= 1, "build_symmetric_lower_bound: n must be at least 1");
    int t = largest_even_below(3LL * n, 2);
    require(t > 0, "build_symmetric_lower_bound: construction is vacuous at n=1 (t=0)");
    int r = (n + 1) / 2;

    ConstructionReport rep = three_clique_gadget(t, r);
    rep.params = {{"n", n}, {"t", t}, {"r", r}};

    bool degrees_ok = true;
    for (int v = 0; v < rep.graph.n(); ++v)
        if (rep.graph.degree(v) != r + t - 1) degrees_ok = false;
    attest(rep, "every vertex has degree ceil(n/2)+t-1", degrees_ok);
    attest(rep, "graph contains no n-fan", !find_fan(rep.graph, n).has_value());
    attest(rep, "complement contains no n-fan", !find_fan(complement(rep.graph), n).has_value());
    attest(rep, "3t+1 >= 9n/2-5", 2 * (3LL * t + 1) >= 9LL * n - 10);
    return rep;
}

ConstructionReport build_asymmetric_lower_bound(int n, int m) {
    require(m >= 1 && n >= 1, "build_asymmetric_lower_bound: n, m must be at least 1");
    require(m <= n, "build_asymmetric_lower_bound: hypothesis m <= n violated");
    require(2 * n <= 3 * m - 6, "build_asymmetric_lower_bound: hypothesis n <= 3m/2-3 violated");
    int t = largest_even_below(m + 2LL * n, 2);
    require(t > 0, "build_asymmetric_lower_bound: degenerate t");
    int r = (2 * n - m + 1) / 2;  // ceil(n - m/2)

    ConstructionReport rep = three_clique_gadget(t, r);
    rep.params = {{"n", n}, {"m", m}, {"t", t}, {"r", r}};

    attest(rep, "graph contains no n-fan", !find_fan(rep.graph, n).has_value());
    attest(rep, "complement contains no m-fan", !find_fan(complement(rep.graph), m).has_value());
    attest(rep, "3t+1 >= 3m/2+3n-5", 2 * (3LL * t + 1) >= 3LL * m + 6LL * n - 10);
    attest(rep, "ceil(n-m/2) <= t/2", r <= t / 2);
    return rep;
}

ConstructionReport build_lemma3_tightness(int n) {
    require(n >= 2, "build_lemma3_tightness: n must be at least 2");
    require(n % 2 == 0, "build_lemma3_tightness: n must be even");
    int half = n / 2;          // |V_i|
    int v0_size = 3 * half;    // |V_0|
    int u_size = n - 1;        // |U_i|
    int x0 = v0_size + 3 * u_size;
    int total = x0 + 1;        // 9n/2 - 2

    ConstructionReport rep;
    rep.graph = SimpleGraph(total);
    rep.params = {{"n", n}};
    rep.labels.push_back({"V_0", range_set(0, v0_size)});
    for (int i = 0; i < 3; ++i)
        rep.labels.push_back(
            {"V_" + std::to_string(i + 1), range_set(i * half, (i + 1) * half)});
    for (int i = 0; i < 3; ++i)
        rep.labels.push_back({"U_" + std::to_string(i + 1),
                              range_set(v0_size + i * u_size, v0_size + (i + 1) * u_size)});
    rep.labels.push_back({"x_0", {x0}});

    for (int a = 0; a < v0_size; ++a)
        for (int b = a + 1; b < v0_size; ++b) rep.graph.add_edge(a, b);
    for (int i = 0; i < 3; ++i)
        for (int a = i * half; a < (i + 1) * half; ++a)
            for (int b = v0_size + i * u_size; b < v0_size + (i + 1) * u_size; ++b)
                rep.graph.add_edge(a, b);
    for (int a = 0; a < v0_size; ++a) rep.graph.add_edge(a, x0);

    guarantee(2 * total == 9 * n - 4, "tightness vertex count mismatch");

    bool outside_ok = true;
    for (int v = 0; v < v0_size; ++v)
        if (rep.graph.degree(v) - (v0_size - 1) != n) outside_ok = false;
    attest(rep, "every V_0 vertex has exactly n outside neighbors", outside_ok);

    SimpleGraph co = complement(rep.graph);
    bool no_fan_g = true, no_fan_co = true;
    for (int v = 0; v < v0_size; ++v) {
        if (find_fan_at(rep.graph, v, n)) no_fan_g = false;
        if (find_fan_at(co, v, n)) no_fan_co = false;
    }
    attest(rep, "no n-fan centered in V_0 in the graph", no_fan_g);
    attest(rep, "no n-fan centered in V_0 in the complement", no_fan_co);
    return rep;
}

}  // namespace ramsey
