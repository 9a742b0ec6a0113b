#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class TargetKind { Fan, Clique, Matching };

struct TargetSpec {
    TargetKind kind = TargetKind::Fan;
    int size = 1;
    std::string str() const;
    bool operator==(const TargetSpec&) const = default;
};

/// Grammar: "fan:<n>" | "clique:<m>" | "matching:<n>", size >= 1.
TargetSpec parse_target(const std::string& text);

enum class Verdict { Arrow, Witness, Inconclusive };
const char* verdict_name(Verdict v);

struct SearchConfig {
    std::uint64_t node_budget = 0;  // 0 = unlimited
    bool deterministic = false;     // sequential subtree order, stable witness
    bool symmetry_breaking = true;
    int hard_cap = 10;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

struct SearchResult {
    TargetSpec red_target;
    TargetSpec blue_target;
    int n_vertices = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ColoredCompleteGraph> witness;
    SearchStats stats;
};

/// Exhaustive backtracking over 2-colorings of K_N in lexicographic edge
/// order, pruning a branch as soon as the partial coloring holds a red
/// red_target or blue blue_target. Arrow means no completed coloring avoids
/// both; a witness is returned otherwise. Budget exhaustion yields
/// Inconclusive, never a guessed verdict. Subtrees (prefixes over the edges
/// at vertices 0 and 1) run on a worker pool; verdicts are
/// scheduling-independent.
SearchResult ramsey_check(TargetSpec red_target, TargetSpec blue_target, int n_vertices,
                          const SearchConfig& cfg = {});

}  // namespace ramsey
