#include "ramsey/io.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {
namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;

    /// Next significant line, or false at EOF. Strips CR; skips blanks and '#'.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::size_t i = raw.find_first_not_of(" \t");
            if (i == std::string::npos || raw[i] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

int parse_header(LineReader& lr, const char* keyword) {
    std::string line;
    if (!lr.next(line)) throw ParseError(lr.lineno ? lr.lineno : 1, "missing header");
    std::istringstream ss(line);
    std::string kw;
    long long n = -1;
    ss >> kw >> n;
    std::string rest;
    if (kw != keyword || n < 0 || (ss >> rest))
        throw ParseError(lr.lineno, std::string("malformed header, expected '") + keyword + " <N>'");
    if (n > 1'000'000) throw ParseError(lr.lineno, "vertex count too large");
    return (int)n;
}

void check_pair(const LineReader& lr, int n, long long u, long long v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError(lr.lineno, "vertex index out of range");
    if (u >= v) throw ParseError(lr.lineno, "pair must satisfy u < v");
}

}  // namespace

SimpleGraph read_graph(std::istream& in) {
    LineReader lr{in};
    int n = parse_header(lr, "graph");
    SimpleGraph g(n);
    std::string line;
    while (lr.next(line)) {
        std::istringstream ss(line);
        std::string tag;
        long long u, v;
        if (!(ss >> tag >> u >> v) || tag != "e")
            throw ParseError(lr.lineno, "malformed edge line, expected 'e <u> <v>'");
        std::string rest;
        if (ss >> rest) throw ParseError(lr.lineno, "trailing tokens on edge line");
        check_pair(lr, n, u, v);
        if (g.has_edge((int)u, (int)v)) throw ParseError(lr.lineno, "duplicate pair");
        g.add_edge((int)u, (int)v);
    }
    return g;
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << "graph " << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out << "e " << u << ' ' << v << '\n';
}

ColoredCompleteGraph read_coloring(std::istream& in) {
    LineReader lr{in};
    int n = parse_header(lr, "coloring");
    ColoredCompleteGraph c(n);
    // seen[] tracks pair coverage: coloring must be total, each pair once.
    SimpleGraph seen(n);
    std::size_t count = 0;
    std::string line;
    while (lr.next(line)) {
        std::istringstream ss(line);
        long long u, v;
        std::string col;
        if (!(ss >> u >> v >> col))
            throw ParseError(lr.lineno, "malformed coloring line, expected '<u> <v> <R|B>'");
        std::string rest;
        if (ss >> rest) throw ParseError(lr.lineno, "trailing tokens on coloring line");
        if (col != "R" && col != "B") throw ParseError(lr.lineno, "color must be R or B");
        check_pair(lr, n, u, v);
        if (seen.has_edge((int)u, (int)v)) throw ParseError(lr.lineno, "duplicate pair");
        seen.add_edge((int)u, (int)v);
        ++count;
        if (col == "R") c.set_color((int)u, (int)v, Color::Red);
    }
    std::size_t expected = std::size_t(n) * (n - 1) / 2;
    if (count != expected)
        throw ParseError(lr.lineno, "missing pair: coloring must cover all " +
                                        std::to_string(expected) + " pairs, got " +
                                        std::to_string(count));
    return c;
}

void write_coloring(std::ostream& out, const ColoredCompleteGraph& c) {
    out << "coloring " << c.n() << '\n';
    for (int u = 0; u < c.n(); ++u)
        for (int v = u + 1; v < c.n(); ++v)
            out << u << ' ' << v << ' ' << color_letter(c.color(u, v)) << '\n';
}

namespace {
template <class T, class Fn>
T read_file(const std::string& path, Fn fn) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    return fn(in);
}
template <class T, class Fn>
void write_file(const std::string& path, const T& obj, Fn fn) {
    std::ofstream out(path);
    require(out.good(), "cannot open file for writing: " + path);
    fn(out, obj);
    out.flush();
    require(out.good(), "write failed: " + path);
}
}  // namespace

SimpleGraph read_graph_file(const std::string& path) {
    return read_file<SimpleGraph>(path, [](std::istream& in) { return read_graph(in); });
}
void write_graph_file(const std::string& path, const SimpleGraph& g) {
    write_file(path, g, [](std::ostream& out, const SimpleGraph& gg) { write_graph(out, gg); });
}
ColoredCompleteGraph read_coloring_file(const std::string& path) {
    return read_file<ColoredCompleteGraph>(path,
                                           [](std::istream& in) { return read_coloring(in); });
}
void write_coloring_file(const std::string& path, const ColoredCompleteGraph& c) {
    write_file(path, c,
               [](std::ostream& out, const ColoredCompleteGraph& cc) { write_coloring(out, cc); });
}

std::string block_comment(const std::string& name, const VertexSet& members) {
    std::ostringstream ss;
    ss << "# block " << name << ":";
    for (int v : members) ss << ' ' << v;
    ss << '\n';
    return ss.str();
}

}  // namespace ramsey
