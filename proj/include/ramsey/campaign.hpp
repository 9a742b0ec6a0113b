#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct CampaignFailure {
    std::uint64_t trial = 0;
    std::string message;
};

struct CampaignReport {
    std::string mode;
    int n = 0;
    int m = 0;
    int n_vertices = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t valid = 0;
    std::vector<CampaignFailure> failures;  // sorted by trial
    bool all_valid() const { return failures.empty(); }
};

/// Vertex count each mode guarantees an extraction on:
///   lemma2:     4n + m + floor(6n/m) + 1
///   theorem1:   ceil(11n/2) + 6
///   corollary1: 6n + 1  (every vertex then majority-dominates 3n pairs)
int campaign_threshold(const std::string& mode, int n, int m);

/// Trial colorings are a pure function of (seed, trial): one fair bit per
/// pair in lexicographic order, 1 = red, drawn from mt19937_64 seeded with
/// seed_seq{seed, trial}. Identical across thread counts and platforms.
ColoredCompleteGraph random_coloring(int n_vertices, std::uint64_t seed, std::uint64_t trial);

/// Runs `trials` independent extractions in mode "lemma2", "theorem1" or
/// "corollary1" and checks every returned certificate against the coloring
/// from scratch. Shape errors, check failures and extractor exceptions are
/// recorded per trial; nothing is swallowed silently.
CampaignReport random_campaign(const std::string& mode, int n, int m, std::uint64_t trials,
                               std::uint64_t seed);

std::string campaign_summary(const CampaignReport& report);

}  // namespace ramsey
