#pragma once

#include "ramsey/graph.hpp"

namespace ramsey {

// Ground-truth brute-force oracles for property tests. Deliberately share no
// decision logic with the fast paths; all are capped at 12 vertices.

/// nu(g) by exhaustive enumeration over all matchings.
int oracle_max_matching(const SimpleGraph& g);

/// Largest k such that k disjoint blade pairs exist in N(v), by exhaustive
/// enumeration of blade sets.
int oracle_fan_at(const SimpleGraph& g, int v);

/// Any center with an n-fan?
bool oracle_fan(const SimpleGraph& g, int n);

/// K_m by enumeration of all m-subsets.
bool oracle_clique(const SimpleGraph& g, int m);

}  // namespace ramsey
