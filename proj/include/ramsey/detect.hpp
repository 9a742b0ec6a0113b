#pragma once

#include <optional>

#include "ramsey/certificates.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Fan with center v iff the neighborhood of v has a matching of size n;
/// exact decision via maximum matching.
std::optional<FanCertificate> find_fan_at(const SimpleGraph& g, int v, int n);

/// Scans all centers; lowest center index wins, so the result is
/// deterministic even under the parallel scan.
std::optional<FanCertificate> find_fan(const SimpleGraph& g, int n);
std::optional<FanCertificate> find_fan_serial(const SimpleGraph& g, int n);

/// A vertex maximizing the neighborhood matching number, and that value
/// (lowest such vertex). Returns {-1, 0} for the empty graph.
std::pair<int, int> max_fan(const SimpleGraph& g);

/// Exact K_m decision: branch-and-bound with a greedy-coloring upper bound.
std::optional<CliqueCertificate> find_clique(const SimpleGraph& g, int m);

/// Book with the given spine iff u,v adjacent with >= n common neighbors.
std::optional<BookCertificate> find_book_at(const SimpleGraph& g, int u, int v, int n);
std::optional<BookCertificate> find_book(const SimpleGraph& g, int n);

/// Runs the plain detector on each color view, Red first.
std::optional<FanCertificate> find_mono_fan(const ColoredCompleteGraph& c, int n);
std::optional<CliqueCertificate> find_mono_clique(const ColoredCompleteGraph& c, int m);

}  // namespace ramsey
