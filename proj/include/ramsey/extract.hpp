#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ramsey/certificates.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// One proof step: a label, a human-readable note, and the named vertex sets
/// the step chose.
struct TraceStep {
    std::string name;
    std::string note;
    std::vector<std::pair<std::string, VertexSet>> sets;
};

struct Trace {
    std::vector<TraceStep> steps;
    void add(std::string name, std::string note = "",
             std::vector<std::pair<std::string, VertexSet>> sets = {});
    /// Appends another trace's steps under a "prefix:" namespace.
    void splice(const std::string& prefix, const Trace& other);
    std::string to_text() const;
};

struct ExtractionOutcome {
    std::variant<FanCertificate, CliqueCertificate> result;
    Trace trace;
    Certificate certificate() const;
};

/// Fan guaranteed once v has >= 3n neighbors in color col: either a col fan
/// centered at v (neighborhood matching) or an opposite-color fan found
/// inside that neighborhood. Failure of both is a logic error, contradicting
/// r(nK_2, F_n) = 3n.
FanCertificate extract_corollary1(const ColoredCompleteGraph& c, int v, Color col, int n);

/// Monochromatic F_n or K_m in any coloring of K_N, N >= 4n+m+floor(6n/m)+1,
/// m >= 2. Every existential step of the argument is computed and every
/// derived inequality asserted; w is the start vertex (default 0, overridable
/// for fuzzing).
ExtractionOutcome extract_lemma2(const ColoredCompleteGraph& c, int n, int m, int w = 0);

struct Lemma3Outcome {
    FanCertificate fan;  // plain; lives in g or in complement(g)
    bool in_complement = false;
    Trace trace;
};

/// Fan with center in the clique v0, in g or its complement. Requires
/// |v0| >= ceil(3n/2)+1 and every v0 vertex to have >= n neighbors outside
/// v0; precondition violations are input errors naming the condition, while
/// mid-proof shortfalls are logic errors carrying the trace.
Lemma3Outcome extract_lemma3(const SimpleGraph& g, const VertexSet& v0, int n);

/// Monochromatic F_n in any coloring of K_N, N >= ceil(11n/2)+5: a degree-3n
/// vertex hands off to extract_corollary1, otherwise the K_m produced by
/// extract_lemma2 at m := N-4n-4 becomes the v0 of extract_lemma3.
ExtractionOutcome extract_theorem1_upper(const ColoredCompleteGraph& c, int n);

}  // namespace ramsey
