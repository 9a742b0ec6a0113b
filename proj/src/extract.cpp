#include "ramsey/extract.hpp"

#include <sstream>

#include "ramsey/detect.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

void Trace::add(std::string name, std::string note,
                std::vector<std::pair<std::string, VertexSet>> sets) {
    steps.push_back({std::move(name), std::move(note), std::move(sets)});
}

void Trace::splice(const std::string& prefix, const Trace& other) {
    for (const TraceStep& s : other.steps)
        steps.push_back({prefix + ":" + s.name, s.note, s.sets});
}

std::string Trace::to_text() const {
    std::ostringstream out;
    for (const TraceStep& s : steps) {
        out << "step " << s.name;
        if (!s.note.empty()) out << ": " << s.note;
        out << '\n';
        for (const auto& [name, set] : s.sets) {
            out << "  " << name << " = {";
            for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
            out << "}\n";
        }
    }
    return out.str();
}

Certificate ExtractionOutcome::certificate() const {
    return std::visit([](const auto& c) -> Certificate { return c; }, result);
}

namespace {

std::string sz(const char* name, std::size_t v) {
    return std::string(name) + "=" + std::to_string(v) + " ";
}

VertexSet matched_vertices(const std::vector<std::pair<int, int>>& edges) {
    VertexSet out;
    for (auto [a, b] : edges) {
        out.push_back(a);
        out.push_back(b);
    }
    return set_sorted(std::move(out));
}

FanCertificate fan_from(int center, const std::vector<std::pair<int, int>>& edges, int n,
                        std::optional<Color> color) {
    guarantee((int)edges.size() >= n, "matching too small to form the fan");
    FanCertificate f;
    f.center = center;
    f.color = color;
    f.blades.assign(edges.begin(), edges.begin() + n);
    return std::get<FanCertificate>(canonical(std::move(f)));
}

std::vector<std::pair<int, int>> map_edges(const Matching& m, const std::vector<int>& to_orig) {
    std::vector<std::pair<int, int>> out;
    out.reserve(m.edges.size());
    for (auto [a, b] : m.edges) {
        int x = to_orig[a], y = to_orig[b];
        out.push_back({std::min(x, y), std::max(x, y)});
    }
    return out;
}

void self_check(const Certificate& cert, const ColoredCompleteGraph& host) {
    CheckResult r = check_certificate(cert, host);
    guarantee(r.pass(), "extracted certificate failed re-validation: " + r.failure);
}

void self_check(const Certificate& cert, const SimpleGraph& host) {
    CheckResult r = check_certificate(cert, host);
    guarantee(r.pass(), "extracted certificate failed re-validation: " + r.failure);
}

}  // namespace

FanCertificate extract_corollary1(const ColoredCompleteGraph& c, int v, Color col, int n) {
    require(n >= 1, "extract_corollary1: n must be at least 1");
    require(v >= 0 && v < c.n(), "extract_corollary1: vertex out of range");
    require(c.color_degree(v, col) >= 3 * n,
            "extract_corollary1: vertex needs at least 3n neighbors in the color");

    SimpleGraph view = color_subgraph(c, col);
    VertexSet nb = view.neighbors(v);

    InducedSubgraph ind = induced(view, nb);
    Matching m = max_matching(ind.graph, n);
    if (m.size() >= n) {
        FanCertificate f = fan_from(v, map_edges(m, ind.to_original), n, col);
        self_check(f, c);
        return f;
    }

    // nu(col view on the neighborhood) < n, so by r(nK_2, F_n) = 3n the
    // opposite color holds a fan inside the same vertex set.
    InducedSubgraph oth = induced(color_subgraph(c, other(col)), nb);
    for (int u = 0; u < oth.graph.n(); ++u) {
        if (auto f = find_fan_at(oth.graph, u, n)) {
            FanCertificate out;
            out.center = oth.to_original[f->center];
            out.color = other(col);
            for (auto [a, b] : f->blades) {
                int x = oth.to_original[a], y = oth.to_original[b];
                out.blades.push_back({std::min(x, y), std::max(x, y)});
            }
            out = std::get<FanCertificate>(canonical(std::move(out)));
            self_check(out, c);
            return out;
        }
    }
    throw LogicViolation(
        "extract_corollary1: neither color holds a fan inside a 3n-neighborhood; "
        "this contradicts r(nK_2, F_n) = 3n");
}

ExtractionOutcome extract_lemma2(const ColoredCompleteGraph& kn, int n, int m, int w) {
    int N = kn.n();
    require(n >= 1, "extract_lemma2: n must be at least 1");
    require(m >= 2, "extract_lemma2: m must be at least 2");
    int cpar = 6 * n / m + 1;
    require(N >= 4 * n + m + cpar, "extract_lemma2: N below 4n+m+floor(6n/m)+1");
    require(w >= 0 && w < N, "extract_lemma2: w out of range");

    Trace trace;
    auto finish = [&](std::variant<FanCertificate, CliqueCertificate> cert) {
        ExtractionOutcome out{std::move(cert), std::move(trace)};
        self_check(out.certificate(), kn);
        return out;
    };

    // Step 1: majority color at w plays the proof's blue.
    int deg_blue = kn.color_degree(w, Color::Blue);
    Color col = (2 * deg_blue >= N - 1) ? Color::Blue : Color::Red;
    int dcol = kn.color_degree(w, col);
    trace.add("fix-w",
              "w=" + std::to_string(w) + " majority=" + color_letter(col) +
                  " degree=" + std::to_string(dcol),
              {{"w", {w}}});

    SimpleGraph B = color_subgraph(kn, col);
    SimpleGraph R = color_subgraph(kn, other(col));

    // Step 2: high degree hands off to the corollary.
    if (dcol >= 3 * n) {
        trace.add("corollary1-exit", "majority degree >= 3n");
        return finish(extract_corollary1(kn, w, col, n));
    }

    // Step 3: matching in the majority neighborhood.
    VertexSet nbw = B.neighbors(w);
    InducedSubgraph G = induced(B, nbw);
    Matching nu = max_matching(G.graph);
    if (nu.size() >= n) {
        trace.add("fan-at-w", "neighborhood matching reached n");
        return finish(fan_from(w, map_edges(nu, G.to_original), n, col));
    }

    // Step 4: Tutte witness for the deficient neighborhood.
    int d = dcol - 2 * n;
    guarantee(2 * d >= m + cpar - 1, "majority degree below (N-1)/2 bound");
    TutteWitness tw = tutte_witness(G.graph);
    int s_size = (int)tw.s.size();
    guarantee((int)tw.odd_components.size() >= s_size + d + 1,
              "Tutte deficiency below o(G-S) >= |S|+d+1");
    VertexSet S;
    for (int v : tw.s) S.push_back(G.to_original[v]);
    trace.add("tutte", sz("d", d) + sz("|S|", S.size()) + sz("odd", tw.odd_components.size()),
              {{"S", S}});

    // Step 5: all components of G - S, smallest first.
    std::vector<VertexSet> comps;
    {
        std::vector<char> in_s(G.graph.n(), 0), seen(G.graph.n(), 0);
        for (int v : tw.s) in_s[v] = 1;
        for (int v = 0; v < G.graph.n(); ++v) {
            if (in_s[v] || seen[v]) continue;
            VertexSet comp;
            std::vector<int> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.push_back(G.to_original[u]);
                G.graph.for_each_neighbor(u, [&](int x) {
                    if (!in_s[x] && !seen[x]) {
                        seen[x] = 1;
                        stack.push_back(x);
                    }
                });
            }
            comps.push_back(set_sorted(std::move(comp)));
        }
        std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.front() < b.front();
        });
    }
    int ell = (int)comps.size();
    guarantee(2 * ell >= 2 * s_size + m + cpar + 1, "component count below |S| + (m+c+1)/2");

    // Observation (b): cross-component pairs all carry the minority color.
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            for (int a : comps[i])
                for (int b : comps[j])
                    guarantee(kn.color(a, b) == other(col),
                              "cross-component pair carries the majority color");

    std::vector<int> reps;
    for (const VertexSet& comp : comps) reps.push_back(comp.front());
    {
        std::ostringstream note;
        note << "l=" << ell << " sizes=";
        for (int i = 0; i < ell; ++i) note << (i ? "," : "") << comps[i].size();
        trace.add("components", note.str(), {{"C_1", comps[0]}, {"reps", set_sorted(reps)}});
    }

    if (ell >= m) {
        CliqueCertificate k;
        k.members = set_sorted(VertexSet(reps.begin(), reps.begin() + m));
        k.color = other(col);
        trace.add("clique-from-representatives", "l >= m");
        return finish(std::move(k));
    }

    guarantee((int)comps[0].size() <= cpar - 1, "smallest component exceeds floor(6n/m)");
    VertexSet D;
    for (int i = 1; i < ell; ++i) D = set_union(D, comps[i]);
    guarantee((int)D.size() + (int)comps[0].size() + s_size == dcol,
              "component sizes do not add up to the majority degree");
    guarantee((int)D.size() >= m + 2 * n - ell + 1 && (int)D.size() >= 2 * n + 2,
              "|D| below m+2n-l+1 or below 2n+2");

    int v1 = reps[0];
    VertexSet X = set_sorted(VertexSet(reps.begin() + 1, reps.end()));
    VertexSet Dstar = set_difference(D, X);
    guarantee((int)Dstar.size() == (int)D.size() - (ell - 1) &&
                  (int)Dstar.size() >= m + 2 * n - 2 * ell + 2,
              "|D*| bound failed");
    trace.add("split-D", sz("|D|", D.size()) + sz("|D*|", Dstar.size()),
              {{"D", D}, {"X", X}, {"D*", Dstar}});

    // Step 6: minority matching inside D*, or the majority clique exit.
    InducedSubgraph rd = induced(R, Dstar);
    Matching mstar = max_matching(rd.graph);
    if (mstar.size() < n - ell + 2) {
        VertexSet Z = set_difference(Dstar, matched_vertices(map_edges(mstar, rd.to_original)));
        guarantee((int)Z.size() >= m, "unmatched remainder smaller than m");
        for (std::size_t i = 0; i < Z.size(); ++i)
            for (std::size_t j = i + 1; j < Z.size(); ++j)
                guarantee(kn.color(Z[i], Z[j]) == col,
                          "minority edge inside the unmatched remainder");
        CliqueCertificate k;
        k.members = VertexSet(Z.begin(), Z.begin() + m);
        k.color = col;
        trace.add("clique-from-remainder", sz("|Z|", Z.size()), {{"Z", Z}});
        return finish(std::move(k));
    }
    std::vector<std::pair<int, int>> M = map_edges(mstar, rd.to_original);
    VertexSet Y = set_difference(Dstar, matched_vertices(M));
    trace.add("minority-matching", sz("|M|", M.size()) + sz("|Y|", Y.size()), {{"Y", Y}});

    // Step 7: greedy near-complete matching between X and Y, padded inside X.
    for (int y : Y) {
        int cnt = 0;
        for (int x : X)
            if (R.has_edge(x, y)) ++cnt;
        guarantee(cnt >= (int)X.size() - 1, "a Y vertex misses two representatives");
    }
    Matching mp = greedy_near_complete_matching(R, X, Y);
    std::vector<std::pair<int, int>> combined = M;
    combined.insert(combined.end(), mp.edges.begin(), mp.edges.end());
    if (mp.size() == (int)Y.size()) {
        VertexSet left = set_difference(X, mp.vertices());
        for (std::size_t i = 0; i + 1 < left.size(); i += 2) {
            guarantee(R.has_edge(left[i], left[i + 1]), "representatives not pairwise adjacent");
            combined.push_back({left[i], left[i + 1]});
        }
    } else {
        guarantee(mp.size() >= (int)X.size() - 1, "greedy matching below |X|-1");
    }
    guarantee((int)combined.size() >= n, "combined matching in D smaller than n");
    {
        std::vector<char> seen(N, 0);
        for (auto [a, b] : combined) {
            guarantee(!seen[a] && !seen[b], "combined matching not disjoint");
            seen[a] = seen[b] = 1;
            guarantee(R.has_edge(a, b), "combined matching uses a majority edge");
        }
    }
    for (int u : D)
        guarantee(R.has_edge(v1, u), "v_1 not minority-adjacent to all of D");
    trace.add("combine", sz("|M'|", mp.size()) + sz("total", combined.size()),
              {{"v_1", {v1}}});
    return finish(fan_from(v1, combined, n, other(col)));
}

namespace {

// Extends disjoint matching edges inside N(center) with pairs from the
// clique v0 (minus the center and already-used vertices) up to n blades.
FanCertificate clique_extended_fan(const SimpleGraph& g, int center,
                                   std::vector<std::pair<int, int>> edges, const VertexSet& v0,
                                   int n) {
    VertexSet used = matched_vertices(edges);
    used = set_union(used, {center});
    VertexSet pool = set_difference(v0, used);
    for (std::size_t i = 0; i + 1 < pool.size() && (int)edges.size() < n; i += 2) {
        guarantee(g.has_edge(pool[i], pool[i + 1]), "v0 pair not adjacent");
        edges.push_back({pool[i], pool[i + 1]});
    }
    return fan_from(center, edges, n, std::nullopt);
}

}  // namespace

Lemma3Outcome extract_lemma3(const SimpleGraph& g, const VertexSet& v0_in, int n) {
    require(n >= 1, "extract_lemma3: n must be at least 1");
    VertexSet v0 = set_sorted(v0_in);
    require(v0.size() == v0_in.size() && !v0.empty(), "extract_lemma3: v0 must be a nonempty set");
    for (int v : v0) require(v >= 0 && v < g.n(), "extract_lemma3: v0 vertex out of range");
    for (std::size_t i = 0; i < v0.size(); ++i)
        for (std::size_t j = i + 1; j < v0.size(); ++j)
            require(g.has_edge(v0[i], v0[j]), "extract_lemma3: v0 is not a clique");
    require((int)v0.size() >= (3 * n + 1) / 2 + 1,
            "extract_lemma3: |v0| must be at least ceil(3n/2)+1");
    for (int v : v0) {
        int outside = g.degree(v) - ((int)v0.size() - 1);
        require(outside >= n,
                "extract_lemma3: a v0 vertex has fewer than n neighbors outside v0");
    }

    Trace trace;
    trace.add("preconditions", sz("|v0|", v0.size()) + sz("n", n), {{"v0", v0}});

    // Step 1: direct neighborhood-matching exits.
    for (int v : v0)
        if (auto f = find_fan_at(g, v, n)) {
            trace.add("direct-fan", "center " + std::to_string(v));
            self_check(*f, g);
            return {*f, false, std::move(trace)};
        }

    // Step 2: claim-1 loop; collect an S_v per v0 vertex.
    int half_floor = n / 2, half_ceil = (n + 1) / 2;
    std::vector<std::pair<int, VertexSet>> s_of;  // (v, S_v), v ascending
    for (int v : v0) {
        VertexSet nb_out = set_difference(g.neighbors(v), v0);
        InducedSubgraph outg = induced(g, nb_out);
        Matching mv_local = max_matching(outg.graph);
        std::vector<std::pair<int, int>> Mv = map_edges(mv_local, outg.to_original);
        int mv = (int)Mv.size();

        if (2 * mv >= half_floor) {
            FanCertificate f = clique_extended_fan(g, v, Mv, v0, n);
            trace.add("separator-extend", "center " + std::to_string(v) + " outside matching " +
                                           std::to_string(mv));
            self_check(f, g);
            return {std::move(f), false, std::move(trace)};
        }

        VertexSet iv = set_difference(nb_out, matched_vertices(Mv));
        for (std::size_t i = 0; i < iv.size(); ++i)
            for (std::size_t j = i + 1; j < iv.size(); ++j)
                guarantee(!g.has_edge(iv[i], iv[j]),
                          "maximum matching left an edge in the remainder");
        guarantee((int)iv.size() >= n - 2 * mv, "independent remainder smaller than n-2|M_v|");
        VertexSet zv(iv.begin(), iv.begin() + (n - 2 * mv));
        VertexSet y = set_difference(v0, {v});

        HallWitness hw = hall_witness(g, zv, y);
        int threshold = half_floor - 2 * mv;
        if (hw.matching.size() >= threshold) {
            std::vector<std::pair<int, int>> edges = Mv;
            edges.insert(edges.end(), hw.matching.edges.begin(), hw.matching.edges.end());
            FanCertificate f = clique_extended_fan(g, v, edges, v0, n);
            trace.add("separator-hall-extend", "center " + std::to_string(v));
            self_check(f, g);
            return {std::move(f), false, std::move(trace)};
        }

        VertexSet ns_y;
        for (int u : y)
            for (int s : hw.s)
                if (g.has_edge(u, s)) {
                    ns_y.push_back(u);
                    break;
                }
        guarantee((int)ns_y.size() <= (int)hw.s.size() - half_ceil - 1,
                  "Hall witness defect below ceil(n/2)+1");
        VertexSet ns0 = set_union(ns_y, {v});
        guarantee(2 * (int)hw.s.size() >= 2 * (int)ns0.size() + n,
                  "|S_v| >= |N(S_v) in v0| + n/2 failed");
        guarantee(2 * (int)ns0.size() <= n, "|N(S_v) in v0| <= n/2 failed");
        for (std::size_t i = 0; i < hw.s.size(); ++i)
            for (std::size_t j = i + 1; j < hw.s.size(); ++j)
                guarantee(!g.has_edge(hw.s[i], hw.s[j]), "S_v is not independent");
        s_of.push_back({v, hw.s});
    }
    trace.add("separators", "S_v recorded for all of v0");

    auto s_at = [&](int v) -> const VertexSet& {
        for (const auto& [u, s] : s_of)
            if (u == v) return s;
        throw LogicViolation("missing S_v");
    };

    // Step 3: the selection loop over shrinking V_i.
    std::vector<int> vs;
    std::vector<VertexSet> nprime;
    std::vector<VertexSet> vchain;  // V_1, V_2, ...
    VertexSet vi = v0;
    for (;;) {
        int best = -1, best_score = -1;
        for (int v : vi) {
            const VertexSet& s = s_at(v);
            int score = 0;
            for (int u : vi)
                for (int x : s)
                    if (g.has_edge(u, x)) {
                        ++score;
                        break;
                    }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        vs.push_back(best);
        const VertexSet& s = s_at(best);
        VertexSet np;
        for (int u : vi)
            for (int x : s)
                if (g.has_edge(u, x)) {
                    np.push_back(u);
                    break;
                }
        nprime.push_back(np);
        VertexSet next = set_difference(vi, np);
        if (next.empty()) break;
        vchain.push_back(next);
        vi = next;
    }
    int t = (int)vs.size();
    guarantee(t > 3, "selection loop stopped at t <= 3");
    guarantee(2 * (int)nprime[0].size() <= n, "|N'(S_{v_1})| exceeds n/2");
    for (int i = 1; i < t; ++i)
        guarantee(nprime[i].size() <= nprime[i - 1].size(), "N' chain not nonincreasing");
    {
        VertexSet all;
        for (const VertexSet& np : nprime) {
            guarantee(!np.empty(), "an N'(S_{v_i}) is empty");
            guarantee(set_intersection(all, np).empty(), "N' sets overlap");
            all = set_union(all, np);
        }
        guarantee(all == v0, "N' sets do not cover v0");
    }
    for (int i = 0; i < t; ++i)
        guarantee(2 * (int)s_at(vs[i]).size() >= 2 * (int)nprime[i].size() + n,
                  "|S_{v_i}| >= |N'(S_{v_i})| + n/2 failed");
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            guarantee(set_intersection(s_at(vs[i]), s_at(vs[j])).empty(),
                      "S_{v_i} sets overlap");
    for (int i = 0; i < (int)vchain.size(); ++i)
        for (int u : vchain[i])
            for (int j = 0; j <= i; ++j)
                for (int x : s_at(vs[j]))
                    guarantee(!g.has_edge(u, x), "a surviving v0 vertex is adjacent to an earlier S_v");
    {
        int sum_np = 0, sum_s = 0;
        for (int i = 0; i + 1 < t; ++i) {
            sum_np += (int)nprime[i].size();
            sum_s += (int)s_at(vs[i]).size();
        }
        guarantee(sum_np >= n, "sum of |N'| over i<t below n");
        guarantee(sum_s >= 2 * n, "sum of |S_{v_i}| over i<t below 2n");
    }
    {
        std::ostringstream note;
        note << "t=" << t << " order=";
        for (int i = 0; i < t; ++i) note << (i ? "," : "") << vs[i];
        trace.add("selection", note.str());
        for (int i = 0; i < t; ++i)
            trace.add("selection-" + std::to_string(i + 1), "v=" + std::to_string(vs[i]),
                      {{"S_v", s_at(vs[i])}, {"N'", nprime[i]}});
    }

    // Step 4: the complement matching over the first t-1 independent sets.
    VertexSet U;
    for (int i = 0; i + 1 < t; ++i) U = set_union(U, s_at(vs[i]));
    SimpleGraph co = complement(g);
    InducedSubgraph cu = induced(co, U);
    Matching M = max_matching(cu.graph);
    if (M.size() < n)
        throw LogicViolation(
            "extract_lemma3: complement matching over the union of S_{v_i} fell short of n "
            "(|M|=" +
            std::to_string(M.size()) + ")\n" + trace.to_text());

    const VertexSet& vlast = vchain[t - 2];
    int w = vlast.front();
    for (int u : U) guarantee(!g.has_edge(w, u), "w adjacent to a blade vertex");

    FanCertificate fan = fan_from(w, map_edges(M, cu.to_original), n, std::nullopt);
    trace.add("final", "w=" + std::to_string(w) + " complement matching " +
                           std::to_string(M.size()),
              {{"U", U}, {"V_last", vlast}});
    self_check(fan, co);
    return {std::move(fan), true, std::move(trace)};
}

ExtractionOutcome extract_theorem1_upper(const ColoredCompleteGraph& kn, int n) {
    int N = kn.n();
    require(n >= 1, "extract_theorem1_upper: n must be at least 1");
    require(N >= (11 * n + 1) / 2 + 5, "extract_theorem1_upper: N below ceil(11n/2)+5");

    Trace trace;
    auto finish = [&](FanCertificate f) {
        ExtractionOutcome out{std::move(f), std::move(trace)};
        self_check(out.certificate(), kn);
        return out;
    };

    // Step 1: any vertex with 3n neighbors in one color.
    for (int v = 0; v < N; ++v)
        for (Color col : {Color::Red, Color::Blue})
            if (kn.color_degree(v, col) >= 3 * n) {
                trace.add("degree-exit", "v=" + std::to_string(v) + " color=" +
                                             color_letter(col));
                return finish(extract_corollary1(kn, v, col, n));
            }

    // Step 2: run the lemma at m := N-4n-4.
    int m = N - 4 * n - 4;
    guarantee(m >= 2, "derived m below 2");
    guarantee(2 * m >= 3 * n + 2, "derived m below ceil(3n/2)+1");
    guarantee(N >= 4 * n + m + 6 * n / m + 1, "derived m misses the lemma threshold");
    trace.add("define-m", "m=" + std::to_string(m));

    ExtractionOutcome sub = extract_lemma2(kn, n, m);
    trace.splice("lemma2", sub.trace);
    if (std::holds_alternative<FanCertificate>(sub.result))
        return finish(std::get<FanCertificate>(std::move(sub.result)));

    CliqueCertificate clique = std::get<CliqueCertificate>(std::move(sub.result));
    guarantee(clique.color.has_value() && (int)clique.members.size() == m,
              "lemma 2 returned a malformed clique");
    Color ccol = *clique.color;
    std::vector<char> in_v0(N, 0);
    for (int v : clique.members) in_v0[v] = 1;
    for (int v : clique.members) {
        int cnt = 0;
        for (int u = 0; u < N; ++u)
            if (u != v && !in_v0[u] && kn.color(u, v) == ccol) ++cnt;
        guarantee(cnt >= n, "a clique vertex lacks n same-color neighbors outside");
    }
    trace.add("clique-to-v0", std::string("color=") + color_letter(ccol),
              {{"V_0", clique.members}});

    Lemma3Outcome l3 = extract_lemma3(color_subgraph(kn, ccol), clique.members, n);
    trace.splice("lemma3", l3.trace);
    FanCertificate fan = std::move(l3.fan);
    fan.color = l3.in_complement ? other(ccol) : ccol;
    return finish(std::move(fan));
}

}  // namespace ramsey
