#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "ramsey/certificates.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/io.hpp"

using namespace ramsey;
using namespace testutil;

TEST_SUITE("graph") {
    TEST_CASE("edges, degrees, neighborhoods") {
        SimpleGraph g(5);
        CHECK(g.n() == 5);
        CHECK(g.edge_count() == 0);
        g.add_edge(0, 1);
        g.add_edge(1, 3);
        g.add_edge(3, 0);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 0));
        CHECK_FALSE(g.has_edge(0, 2));
        CHECK_FALSE(g.has_edge(2, 2));
        CHECK(g.degree(1) == 2);
        CHECK(g.degree(4) == 0);
        CHECK(g.neighbors(3) == VertexSet{0, 1});
        CHECK(g.edge_count() == 3);
        CHECK(g.common_neighbors(0, 1) == 1);  // vertex 3
        g.remove_edge(0, 1);
        CHECK_FALSE(g.has_edge(0, 1));
        CHECK(g.edge_count() == 2);
    }

    TEST_CASE("bad edges rejected") {
        SimpleGraph g(3);
        CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
        CHECK_THROWS_AS(g.add_edge(-1, 1), InputError);
        CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    }

    TEST_CASE("complement is an involution and splits the pair count") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            int n = 2 + int(seed % 23);
            SimpleGraph g = random_graph(n, 1000 + seed);
            SimpleGraph co = complement(g);
            CHECK(complement(co) == g);
            CHECK(g.edge_count() + co.edge_count() == std::size_t(n) * (n - 1) / 2);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) CHECK(g.has_edge(u, v) != co.has_edge(u, v));
        }
    }

    TEST_CASE("induced subgraph keeps exactly the inner edges") {
        SimpleGraph g = petersen_graph();
        auto sub = induced(g, {0, 1, 2, 5, 7});
        CHECK(sub.graph.n() == 5);
        CHECK(sub.to_original == std::vector<int>{0, 1, 2, 5, 7});
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                CHECK(sub.graph.has_edge(a, b) ==
                      g.has_edge(sub.to_original[a], sub.to_original[b]));
        CHECK_THROWS_AS(induced(g, {0, 10}), InputError);
        CHECK_THROWS_AS(induced(g, {3, 3}), InputError);
    }

    TEST_CASE("colored complete graph views") {
        ColoredCompleteGraph c(6, Color::Blue);
        CHECK(c.n() == 6);
        CHECK(c.color(2, 5) == Color::Blue);
        c.set_color(2, 5, Color::Red);
        CHECK(c.color(5, 2) == Color::Red);
        CHECK(c.color_degree(2, Color::Red) == 1);
        CHECK(c.color_degree(2, Color::Blue) == 4);
        CHECK_THROWS_AS(c.color(3, 3), InputError);

        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            ColoredCompleteGraph k = random_2coloring(7, seed);
            SimpleGraph red = color_subgraph(k, Color::Red);
            SimpleGraph blue = color_subgraph(k, Color::Blue);
            CHECK(blue == complement(red));
            for (int v = 0; v < 7; ++v)
                CHECK(k.color_degree(v, Color::Red) + k.color_degree(v, Color::Blue) == 6);
            CHECK(ColoredCompleteGraph::from_red_graph(red) == k);
        }
    }

    TEST_CASE("sorted set helpers") {
        CHECK(set_sorted({3, 1, 2}) == VertexSet{1, 2, 3});
        CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
        CHECK(set_intersection({1, 2, 4}, {2, 4, 5}) == VertexSet{2, 4});
        CHECK(set_difference({1, 2, 3, 4}, {2, 4}) == VertexSet{1, 3});
        CHECK(set_contains({1, 5, 9}, 5));
        CHECK_FALSE(set_contains({1, 5, 9}, 6));
    }
}

TEST_SUITE("io") {
    TEST_CASE("graph file round trip") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            SimpleGraph g = random_graph(3 + int(seed) * 2, 99 + seed);
            std::ostringstream out;
            write_graph(out, g);
            std::istringstream in(out.str());
            CHECK(read_graph(in) == g);
        }
    }

    TEST_CASE("coloring file round trip") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            ColoredCompleteGraph c = random_2coloring(3 + int(seed), 7 + seed);
            std::ostringstream out;
            write_coloring(out, c);
            std::istringstream in(out.str());
            CHECK(read_coloring(in) == c);
        }
    }

    TEST_CASE("comments and blank lines are skipped") {
        std::istringstream in("# a comment\n\ngraph 3\n# another\ne 0 2\n\n");
        SimpleGraph g = read_graph(in);
        CHECK(g.n() == 3);
        CHECK(g.has_edge(0, 2));
        CHECK(g.edge_count() == 1);
    }

    TEST_CASE("graph parse errors carry line numbers") {
        auto line_of = [](const std::string& text) {
            std::istringstream in(text);
            try {
                read_graph(in);
            } catch (const ParseError& e) {
                return e.line;
            }
            return -1;
        };
        CHECK(line_of("coloring 3\n") == 1);           // wrong header keyword
        CHECK(line_of("graph\n") == 1);                // missing N
        CHECK(line_of("graph 3 7\n") == 1);            // trailing token
        CHECK(line_of("graph 3\ne 2 1\n") == 2);       // u >= v
        CHECK(line_of("graph 3\ne 0 3\n") == 2);       // out of range
        CHECK(line_of("# x\ngraph 3\ne 0 1\ne 0 1\n") == 4);  // duplicate
        CHECK(line_of("graph 3\nx 0 1\n") == 2);       // bad tag
    }

    TEST_CASE("coloring parse errors") {
        auto fails = [](const std::string& text) {
            std::istringstream in(text);
            try {
                read_coloring(in);
            } catch (const InputError&) {
                return true;
            }
            return false;
        };
        CHECK(fails("coloring 3\n0 1 R\n0 2 B\n"));              // missing pair
        CHECK(fails("coloring 3\n0 1 R\n0 2 B\n1 2 X\n"));       // bad color letter
        CHECK(fails("coloring 3\n0 1 R\n0 1 B\n1 2 R\n"));       // duplicate pair
        CHECK(fails("graph 3\n"));                               // wrong header
        CHECK_FALSE(fails("coloring 3\n1 2 R\n0 2 B\n0 1 R\n"));  // any order is fine
    }

    TEST_CASE("block comment format") {
        CHECK(block_comment("V_0", {0, 1, 4}) == "# block V_0: 0 1 4\n");
        CHECK(block_comment("x_0", {7}) == "# block x_0: 7\n");
    }
}

TEST_SUITE("certificates") {
    TEST_CASE("serialization round trips") {
        FanCertificate fan;
        fan.center = 4;
        fan.blades = {{1, 2}, {5, 7}};
        fan.color = Color::Red;
        Certificate cf = fan;
        Certificate back = read_certificate_text(write_certificate(cf));
        REQUIRE(std::holds_alternative<FanCertificate>(back));
        auto& f2 = std::get<FanCertificate>(back);
        CHECK(f2.center == 4);
        CHECK(f2.blades == fan.blades);
        CHECK(f2.color == Color::Red);

        CliqueCertificate kq;
        kq.members = {3, 1, 8};
        kq.color = std::nullopt;
        Certificate ck = canonical(kq);
        Certificate back2 = read_certificate_text(write_certificate(ck));
        auto& k2 = std::get<CliqueCertificate>(back2);
        CHECK(k2.members == VertexSet{1, 3, 8});
        CHECK_FALSE(k2.color.has_value());

        BookCertificate bk;
        bk.spine = {2, 6};
        bk.pages = {0, 9, 4};
        bk.color = Color::Blue;
        Certificate cb = canonical(bk);
        Certificate back3 = read_certificate_text(write_certificate(cb));
        auto& b2 = std::get<BookCertificate>(back3);
        CHECK(b2.spine == std::pair<int, int>{2, 6});
        CHECK(b2.pages == VertexSet{0, 4, 9});
        CHECK(b2.color == Color::Blue);
    }

    TEST_CASE("reader rejects malformed certificates") {
        CHECK_THROWS_AS(read_certificate_text("color R\ncenter 1\nblades 2 3\n"), InputError);
        CHECK_THROWS_AS(read_certificate_text("type fan\ncolor R\ncenter 1\nblades 2\n"),
                        InputError);  // odd blade list
        CHECK_THROWS_AS(read_certificate_text("type fan\ncolor G\ncenter 1\nblades 2 3\n"),
                        InputError);
        CHECK_THROWS_AS(
            read_certificate_text("type fan\ncolor R\ncenter 1\nblades 2 3\nwhat 5\n"),
            InputError);
        CHECK_THROWS_AS(read_certificate_text("type pizza\ncolor R\n"), InputError);
    }

    TEST_CASE("fan checking in a plain host") {
        SimpleGraph k9 = complete_graph(9);
        FanCertificate fan;
        fan.center = 0;
        fan.blades = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
        CHECK(check_certificate(fan, k9).pass());

        FanCertificate shared = fan;
        shared.blades[1] = {2, 3};  // vertex 2 reused
        CHECK(check_certificate(shared, k9).failure == "blades not disjoint");

        FanCertificate missing = fan;
        SimpleGraph g = k9;
        g.remove_edge(3, 4);
        CHECK_FALSE(check_certificate(missing, g).pass());

        FanCertificate loop = fan;
        loop.blades[0] = {1, 1};
        CHECK_FALSE(check_certificate(loop, k9).pass());

        FanCertificate centered = fan;
        centered.blades[0] = {0, 2};
        CHECK_FALSE(check_certificate(centered, k9).pass());

        FanCertificate oob = fan;
        oob.center = 9;
        CHECK_FALSE(check_certificate(oob, k9).pass());
    }

    TEST_CASE("color mismatches are named") {
        ColoredCompleteGraph c(7, Color::Red);
        FanCertificate fan;
        fan.center = 0;
        fan.blades = {{1, 2}, {3, 4}};
        fan.color = Color::Red;
        CHECK(check_certificate(fan, c).pass());

        c.set_color(3, 4, Color::Blue);
        CheckResult res = check_certificate(fan, c);
        CHECK(res.failure == "edge color mismatch 3-4");

        FanCertificate plain = fan;
        plain.color = std::nullopt;
        CHECK(check_certificate(plain, c).failure ==
              "uncolored certificate checked against a coloring");
        SimpleGraph g = complete_graph(7);
        CHECK(check_certificate(fan, g).failure ==
              "colored certificate checked against a plain graph");
    }

    TEST_CASE("clique and book checking") {
        SimpleGraph k5 = complete_graph(5);
        CliqueCertificate kq;
        kq.members = {0, 2, 4};
        CHECK(check_certificate(kq, k5).pass());
        kq.members = {0, 2, 2};
        CHECK(check_certificate(kq, k5).failure == "duplicate member");

        SimpleGraph g = complete_graph(4);
        g.remove_edge(2, 3);  // 0 and 1 keep degree 3
        BookCertificate bk;
        bk.spine = {0, 1};
        bk.pages = {2, 3};
        CHECK(check_certificate(bk, g).pass());
        bk.pages = {2, 0};
        CHECK_FALSE(check_certificate(bk, g).pass());
        bk.pages = {2, 2};
        CHECK_FALSE(check_certificate(bk, g).pass());
        bk.spine = {1, 0};
        bk.pages = {2, 3};
        SimpleGraph h = g;
        h.remove_edge(0, 1);
        CHECK_FALSE(check_certificate(bk, h).pass());
    }
}
