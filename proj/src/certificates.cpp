#include "ramsey/certificates.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {
namespace {

std::string pair_name(int u, int v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

// Shared edge test: plain hosts check presence; colored hosts check the
// certificate's color (every pair of a complete coloring is an edge).
struct PlainHost {
    const SimpleGraph& g;
    int n() const { return g.n(); }
    CheckResult edge(int u, int v, const std::optional<Color>&) const {
        if (!g.has_edge(u, v)) return CheckResult::fail("missing edge " + pair_name(u, v));
        return CheckResult::ok();
    }
    CheckResult admits(const std::optional<Color>& c) const {
        if (c) return CheckResult::fail("colored certificate checked against a plain graph");
        return CheckResult::ok();
    }
};

struct ColoredHost {
    const ColoredCompleteGraph& g;
    int n() const { return g.n(); }
    CheckResult edge(int u, int v, const std::optional<Color>& c) const {
        if (g.color(u, v) != *c) return CheckResult::fail("edge color mismatch " + pair_name(u, v));
        return CheckResult::ok();
    }
    CheckResult admits(const std::optional<Color>& c) const {
        if (!c) return CheckResult::fail("uncolored certificate checked against a coloring");
        return CheckResult::ok();
    }
};

template <class Host>
CheckResult check_fan(const FanCertificate& f, const Host& host) {
    if (auto r = host.admits(f.color); !r.pass()) return r;
    if (f.blades.empty()) return CheckResult::fail("fan has no blades");
    if (f.center < 0 || f.center >= host.n()) return CheckResult::fail("center out of range");
    std::vector<char> seen(host.n(), 0);
    for (auto [a, b] : f.blades) {
        if (a < 0 || a >= host.n() || b < 0 || b >= host.n())
            return CheckResult::fail("blade vertex out of range");
        if (a == b) return CheckResult::fail("degenerate blade");
        if (a == f.center || b == f.center) return CheckResult::fail("blade contains center");
        if (seen[a] || seen[b]) return CheckResult::fail("blades not disjoint");
        seen[a] = seen[b] = 1;
    }
    for (auto [a, b] : f.blades) {
        if (auto r = host.edge(f.center, a, f.color); !r.pass()) return r;
        if (auto r = host.edge(f.center, b, f.color); !r.pass()) return r;
        if (auto r = host.edge(a, b, f.color); !r.pass()) return r;
    }
    return CheckResult::ok();
}

template <class Host>
CheckResult check_clique(const CliqueCertificate& c, const Host& host) {
    if (auto r = host.admits(c.color); !r.pass()) return r;
    if (c.members.empty()) return CheckResult::fail("clique has no members");
    std::vector<char> seen(host.n(), 0);
    for (int v : c.members) {
        if (v < 0 || v >= host.n()) return CheckResult::fail("member out of range");
        if (seen[v]) return CheckResult::fail("duplicate member");
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j)
            if (auto r = host.edge(c.members[i], c.members[j], c.color); !r.pass()) return r;
    return CheckResult::ok();
}

template <class Host>
CheckResult check_book(const BookCertificate& b, const Host& host) {
    if (auto r = host.admits(b.color); !r.pass()) return r;
    auto [u, v] = b.spine;
    if (u < 0 || u >= host.n() || v < 0 || v >= host.n())
        return CheckResult::fail("spine vertex out of range");
    if (u == v) return CheckResult::fail("degenerate spine");
    if (b.pages.empty()) return CheckResult::fail("book has no pages");
    if (auto r = host.edge(u, v, b.color); !r.pass()) return r;
    std::vector<char> seen(host.n(), 0);
    for (int p : b.pages) {
        if (p < 0 || p >= host.n()) return CheckResult::fail("page out of range");
        if (p == u || p == v) return CheckResult::fail("page equals spine endpoint");
        if (seen[p]) return CheckResult::fail("duplicate page");
        seen[p] = 1;
    }
    for (int p : b.pages) {
        if (auto r = host.edge(u, p, b.color); !r.pass()) return r;
        if (auto r = host.edge(v, p, b.color); !r.pass()) return r;
    }
    return CheckResult::ok();
}

template <class Host>
CheckResult check_any(const Certificate& cert, const Host& host) {
    return std::visit(
        [&](const auto& c) -> CheckResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, FanCertificate>) return check_fan(c, host);
            else if constexpr (std::is_same_v<T, CliqueCertificate>) return check_clique(c, host);
            else return check_book(c, host);
        },
        cert);
}

}  // namespace

CheckResult check_certificate(const Certificate& cert, const SimpleGraph& host) {
    return check_any(cert, PlainHost{host});
}

CheckResult check_certificate(const Certificate& cert, const ColoredCompleteGraph& host) {
    return check_any(cert, ColoredHost{host});
}

namespace {

std::string color_field(const std::optional<Color>& c) {
    if (!c) return "none";
    return std::string(1, color_letter(*c));
}

void write_ints(std::ostream& out, const char* key, const std::vector<int>& vals) {
    out << key;
    for (int v : vals) out << ' ' << v;
    out << '\n';
}

}  // namespace

Certificate canonical(Certificate cert) {
    std::visit(
        [](auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, FanCertificate>) {
                for (auto& [a, b] : c.blades)
                    if (a > b) std::swap(a, b);
                std::sort(c.blades.begin(), c.blades.end());
            } else if constexpr (std::is_same_v<T, CliqueCertificate>) {
                std::sort(c.members.begin(), c.members.end());
            } else {
                if (c.spine.first > c.spine.second) std::swap(c.spine.first, c.spine.second);
                std::sort(c.pages.begin(), c.pages.end());
            }
        },
        cert);
    return cert;
}

std::string write_certificate(const Certificate& cert_in) {
    Certificate cert = canonical(cert_in);
    std::ostringstream out;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, FanCertificate>) {
                out << "type fan\n";
                out << "color " << color_field(c.color) << '\n';
                out << "center " << c.center << '\n';
                std::vector<int> flat;
                for (auto [a, b] : c.blades) {
                    flat.push_back(a);
                    flat.push_back(b);
                }
                write_ints(out, "blades", flat);
            } else if constexpr (std::is_same_v<T, CliqueCertificate>) {
                out << "type clique\n";
                out << "color " << color_field(c.color) << '\n';
                write_ints(out, "members", c.members);
            } else {
                out << "type book\n";
                out << "color " << color_field(c.color) << '\n';
                out << "spine " << c.spine.first << ' ' << c.spine.second << '\n';
                write_ints(out, "pages", c.pages);
            }
        },
        cert);
    return out.str();
}

Certificate read_certificate(std::istream& in) {
    std::string line, type;
    std::optional<Color> color;
    bool color_seen = false;
    std::optional<int> center;
    std::optional<std::pair<int, int>> spine;
    std::optional<std::vector<int>> blades, members, pages;
    int lineno = 0;

    auto parse_int_list = [&](std::istringstream& ss) {
        std::vector<int> vals;
        long long v;
        while (ss >> v) {
            if (v < -1'000'000'000 || v > 1'000'000'000)
                throw ParseError(lineno, "integer out of range");
            vals.push_back((int)v);
        }
        if (!ss.eof()) throw ParseError(lineno, "non-integer token in list");
        return vals;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos || line[i] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "type") {
            if (!(ss >> type) || (type != "fan" && type != "clique" && type != "book"))
                throw ParseError(lineno, "type must be fan, clique, or book");
        } else if (key == "color") {
            std::string c;
            if (!(ss >> c) || (c != "R" && c != "B" && c != "none"))
                throw ParseError(lineno, "color must be R, B, or none");
            color_seen = true;
            if (c == "R") color = Color::Red;
            else if (c == "B") color = Color::Blue;
        } else if (key == "center") {
            int v;
            if (!(ss >> v)) throw ParseError(lineno, "center needs one integer");
            center = v;
        } else if (key == "spine") {
            int u, v;
            if (!(ss >> u >> v)) throw ParseError(lineno, "spine needs two integers");
            spine = {u, v};
        } else if (key == "blades") {
            blades = parse_int_list(ss);
        } else if (key == "members") {
            members = parse_int_list(ss);
        } else if (key == "pages") {
            pages = parse_int_list(ss);
        } else {
            throw ParseError(lineno, "unknown field '" + key + "'");
        }
    }
    if (type.empty()) throw ParseError(lineno, "missing 'type' field");
    if (!color_seen) throw ParseError(lineno, "missing 'color' field");

    if (type == "fan") {
        if (!center) throw ParseError(lineno, "fan needs a 'center' field");
        if (!blades) throw ParseError(lineno, "fan needs a 'blades' field");
        if (blades->size() % 2 != 0) throw ParseError(lineno, "blades list must pair up");
        FanCertificate f;
        f.center = *center;
        f.color = color;
        for (std::size_t k = 0; k < blades->size(); k += 2)
            f.blades.push_back({(*blades)[k], (*blades)[k + 1]});
        return f;
    }
    if (type == "clique") {
        if (!members) throw ParseError(lineno, "clique needs a 'members' field");
        CliqueCertificate c;
        c.members = *members;
        c.color = color;
        return c;
    }
    if (!spine) throw ParseError(lineno, "book needs a 'spine' field");
    if (!pages) throw ParseError(lineno, "book needs a 'pages' field");
    BookCertificate b;
    b.spine = *spine;
    b.pages = *pages;
    b.color = color;
    return b;
}

Certificate read_certificate_text(const std::string& text) {
    std::istringstream in(text);
    return read_certificate(in);
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    return read_certificate(in);
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    require(out.good(), "cannot open file for writing: " + path);
    out << write_certificate(cert);
    out.flush();
    require(out.good(), "write failed: " + path);
}

}  // namespace ramsey
