#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Center vertex plus n vertex-disjoint blade pairs; every blade {a,b} forms
/// a triangle c-a-b. color is set for monochromatic certificates.
struct FanCertificate {
    int center = -1;
    std::vector<std::pair<int, int>> blades;
    std::optional<Color> color;
};

struct CliqueCertificate {
    VertexSet members;
    std::optional<Color> color;
};

/// Spine edge plus n pages, each adjacent to both spine endpoints.
struct BookCertificate {
    std::pair<int, int> spine{-1, -1};
    VertexSet pages;
    std::optional<Color> color;
};

using Certificate = std::variant<FanCertificate, CliqueCertificate, BookCertificate>;

/// pass() iff the certificate re-validated from scratch; otherwise `failure`
/// names the first violated condition.
struct CheckResult {
    std::string failure;
    bool pass() const { return failure.empty(); }
    static CheckResult ok() { return {}; }
    static CheckResult fail(std::string why) { return {std::move(why)}; }
};

CheckResult check_certificate(const Certificate& cert, const SimpleGraph& host);
CheckResult check_certificate(const Certificate& cert, const ColoredCompleteGraph& host);

// Text form, e.g.
//   type fan
//   color R
//   center 4
//   blades 1 2 5 7
// One "key value..." line per field; `blades` is a flat pair list; `color` is
// R, B, or none; members/pages/blades are emitted sorted. Lines starting '#'
// and blank lines are ignored on input.
std::string write_certificate(const Certificate& cert);
Certificate read_certificate(std::istream& in);
Certificate read_certificate_text(const std::string& text);
Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const Certificate& cert);

/// Sorts blade pairs internally and by first endpoint; members/pages sorted.
Certificate canonical(Certificate cert);

}  // namespace ramsey
