#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Attestation {
    std::string claim;
    bool pass;
};

/// Generated graph plus its named vertex blocks, the parameters that shaped
/// it, and the machine-checked claims it was built to satisfy. A failed
/// attestation on valid input throws LogicViolation from the builder.
struct ConstructionReport {
    SimpleGraph graph;
    std::vector<std::pair<std::string, VertexSet>> labels;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<Attestation> attestations;

    const VertexSet& block(const std::string& name) const;
};

/// Circulant bipartite graph on half+half vertices (left 0..half-1, right
/// half..2*half-1): left i joined to right (i+k) mod half for k = 0..r-1.
SimpleGraph regular_bipartite(int half, int r);

/// Graph on 3t vertices, t the largest even integer below 3n/2: three
/// t-cliques V_1,V_2,V_3 split into halves X_i, Y_i, with a ceil(n/2)-regular
/// circulant between X_i and Y_{i+1} (cyclically). Neither the graph nor its
/// complement contains a fan of n triangles, so together with one extra
/// vertex it certifies the lower bound 3t+1 >= 9n/2-5.
ConstructionReport build_symmetric_lower_bound(int n);

/// Same block shape with t the largest even integer below m/2 + n and
/// cross-regularity ceil(n - m/2); avoids an n-fan while the complement
/// avoids an m-fan. Requires m <= n <= 3m/2 - 3.
ConstructionReport build_asymmetric_lower_bound(int n, int m);

/// n even: clique V_0 of size 3n/2 split into thirds V_1,V_2,V_3; independent
/// sets U_i of size n-1 joined completely to V_i only; one vertex x_0 joined
/// to all of V_0. Every V_0 vertex has exactly n outside neighbors yet no
/// n-fan centers in V_0 in the graph or its complement.
ConstructionReport build_lemma3_tightness(int n);

/// Largest even integer strictly below num/den (positive arguments).
int largest_even_below(long long num, long long den);

}  // namespace ramsey
