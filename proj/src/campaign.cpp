#include "ramsey/campaign.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>

#include "ramsey/certificates.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/extract.hpp"

namespace ramsey {

int campaign_threshold(const std::string& mode, int n, int m) {
    require(n >= 1, "n must be at least 1");
    if (mode == "lemma2") {
        require(m >= 2, "lemma2 needs m >= 2");
        return 4 * n + m + (6 * n) / m + 1;
    }
    if (mode == "theorem1") return (11 * n + 1) / 2 + 6;
    if (mode == "corollary1") return 6 * n + 1;
    throw InputError("unknown campaign mode '" + mode + "'");
}

ColoredCompleteGraph random_coloring(int n_vertices, std::uint64_t seed, std::uint64_t trial) {
    require(n_vertices >= 1, "coloring needs at least one vertex");
    std::seed_seq sources{seed, trial};
    std::mt19937_64 rng(sources);
    ColoredCompleteGraph c(n_vertices, Color::Blue);
    for (int u = 0; u < n_vertices; ++u)
        for (int v = u + 1; v < n_vertices; ++v)
            if (rng() & 1u) c.set_color(u, v, Color::Red);
    return c;
}

namespace {

std::string shape_failure(const Certificate& cert, const std::string& mode, int n, int m) {
    if (const auto* fan = std::get_if<FanCertificate>(&cert)) {
        if (!fan->color) return "extractor returned an uncolored fan";
        if (static_cast<int>(fan->blades.size()) != n)
            return "fan has " + std::to_string(fan->blades.size()) + " blades, wanted " +
                   std::to_string(n);
        return {};
    }
    const auto& clique = std::get<CliqueCertificate>(cert);
    if (mode != "lemma2") return "mode " + mode + " must produce a fan, got a clique";
    if (!clique.color) return "extractor returned an uncolored clique";
    if (static_cast<int>(clique.members.size()) != m)
        return "clique has " + std::to_string(clique.members.size()) + " members, wanted " +
               std::to_string(m);
    return {};
}

std::string run_one(const ColoredCompleteGraph& c, const std::string& mode, int n, int m) {
    Certificate cert;
    if (mode == "lemma2") {
        cert = extract_lemma2(c, n, m).certificate();
    } else if (mode == "theorem1") {
        cert = extract_theorem1_upper(c, n).certificate();
    } else {
        Color col =
            c.color_degree(0, Color::Red) >= 3 * n ? Color::Red : Color::Blue;
        cert = extract_corollary1(c, 0, col, n);
    }
    CheckResult chk = check_certificate(cert, c);
    if (!chk.pass()) return "certificate rejected: " + chk.failure;
    return shape_failure(cert, mode, n, m);
}

}  // namespace

CampaignReport random_campaign(const std::string& mode, int n, int m, std::uint64_t trials,
                               std::uint64_t seed) {
    CampaignReport rep;
    rep.mode = mode;
    rep.n = n;
    rep.m = mode == "lemma2" ? m : 0;
    rep.n_vertices = campaign_threshold(mode, n, m);
    rep.trials = trials;
    rep.seed = seed;

    std::int64_t count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t t = 0; t < count; ++t) {
        auto trial = static_cast<std::uint64_t>(t);
        std::string failure;
        try {
            ColoredCompleteGraph c = random_coloring(rep.n_vertices, seed, trial);
            failure = run_one(c, mode, n, rep.m);
        } catch (const std::exception& e) {
            failure = e.what();
        }
#pragma omp critical(ramsey_campaign_collect)
        {
            if (failure.empty()) {
                ++rep.valid;
            } else {
                rep.failures.push_back({trial, failure});
            }
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const CampaignFailure& a, const CampaignFailure& b) { return a.trial < b.trial; });
    return rep;
}

std::string campaign_summary(const CampaignReport& rep) {
    std::ostringstream out;
    out << "campaign mode=" << rep.mode << " n=" << rep.n;
    if (rep.mode == "lemma2") out << " m=" << rep.m;
    out << " N=" << rep.n_vertices << " seed=" << rep.seed << " trials=" << rep.trials << "\n";
    out << "valid " << rep.valid << "/" << rep.trials << "\n";
    for (const auto& f : rep.failures) out << "trial " << f.trial << ": " << f.message << "\n";
    return out.str();
}

}  // namespace ramsey
