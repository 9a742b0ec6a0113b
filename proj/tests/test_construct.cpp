#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;
using namespace testutil;

namespace {

/// Independent restatement of "largest even integer strictly below num/den".
int brute_largest_even_below(int num, int den) {
    for (int t = num / den + 1; t >= 0; --t)
        if (t % 2 == 0 && 2 * t * den < 2 * num) return t;
    return -1;
}

/// Every vertex appears in exactly one of the given blocks.
void check_partition(const ConstructionReport& rep, const std::vector<std::string>& names) {
    std::vector<int> all;
    for (const auto& name : names) {
        const VertexSet& block = rep.block(name);
        all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(all.begin(), all.end());
    VertexSet expect(rep.graph.n());
    for (int v = 0; v < rep.graph.n(); ++v) expect[v] = v;
    CHECK(all == expect);
}

long long param(const ConstructionReport& rep, const std::string& key) {
    for (const auto& [k, v] : rep.params)
        if (k == key) return v;
    FAIL("missing param " << key);
    return -1;
}

}  // namespace

TEST_SUITE("construct") {
    TEST_CASE("regular bipartite circulant") {
        SimpleGraph empty = regular_bipartite(4, 0);
        CHECK(empty.n() == 8);
        CHECK(empty.edge_count() == 0);

        SimpleGraph full = regular_bipartite(4, 4);
        CHECK(full.edge_count() == 16);
        for (int x = 0; x < 4; ++x)
            for (int y = 4; y < 8; ++y) CHECK(full.has_edge(x, y));

        SimpleGraph two = regular_bipartite(5, 2);
        CHECK(two.edge_count() == 10);
        for (int v = 0; v < 10; ++v) CHECK(two.degree(v) == 2);

        CHECK_THROWS_AS(regular_bipartite(4, 5), InputError);
    }

    TEST_CASE("largest even below") {
        CHECK(largest_even_below(3 * 4, 2) == 4);   // below 6 -> 4
        CHECK(largest_even_below(3 * 2, 2) == 2);   // below 3 -> 2
        CHECK(largest_even_below(3 * 10, 2) == 14); // below 15 -> 14
        CHECK(largest_even_below(3 * 1, 2) == 0);   // below 1.5 -> 0
        for (int num = 1; num <= 60; ++num)
            CHECK(largest_even_below(num, 2) == brute_largest_even_below(num, 2));
    }

    TEST_CASE("symmetric lower bound: n=4") {
        auto rep = build_symmetric_lower_bound(4);
        CHECK(param(rep, "t") == 4);
        CHECK(rep.graph.n() == 12);
        for (int v = 0; v < 12; ++v) CHECK(rep.graph.degree(v) == 5);  // ceil(4/2)+4-1
        for (const auto& att : rep.attestations) CHECK(att.pass);
        check_partition(rep, {"V_1", "V_2", "V_3"});
        check_partition(rep, {"X_1", "Y_1", "X_2", "Y_2", "X_3", "Y_3"});
        CHECK(rep.block("V_1").size() == 4);
        CHECK(rep.block("X_2").size() == 2);

        // cliques inside each V_i
        for (const char* name : {"V_1", "V_2", "V_3"}) {
            const VertexSet& b = rep.block(name);
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(rep.graph.has_edge(b[i], b[j]));
        }
    }

    TEST_CASE("symmetric lower bound: n=2 and n=10 sizes") {
        auto rep2 = build_symmetric_lower_bound(2);
        CHECK(param(rep2, "t") == 2);
        CHECK(rep2.graph.n() == 6);
        for (int v = 0; v < 6; ++v) CHECK(rep2.graph.degree(v) == 2);
        CHECK_FALSE(find_fan(rep2.graph, 2).has_value());
        CHECK_FALSE(find_fan(complement(rep2.graph), 2).has_value());

        auto rep10 = build_symmetric_lower_bound(10);
        CHECK(param(rep10, "t") == 14);
        CHECK(rep10.graph.n() == 42);
        CHECK(3 * 14 + 1 >= 9 * 10 / 2 - 5);

        CHECK_THROWS_AS(build_symmetric_lower_bound(1), InputError);
        CHECK_THROWS_AS(build_symmetric_lower_bound(0), InputError);
    }

    TEST_CASE("symmetric t parameter tracks the brute definition") {
        for (int n = 2; n <= 12; ++n) {
            auto rep = build_symmetric_lower_bound(n);
            CHECK(param(rep, "t") == brute_largest_even_below(3 * n, 2));
            CHECK(rep.graph.n() == 3 * param(rep, "t"));
        }
    }

    TEST_CASE("asymmetric lower bound") {
        auto rep = build_asymmetric_lower_bound(10, 10);
        CHECK(param(rep, "r") == 5);
        CHECK(param(rep, "t") == brute_largest_even_below(10 + 2 * 10, 2));
        for (const auto& att : rep.attestations) CHECK(att.pass);
        check_partition(rep, {"V_1", "V_2", "V_3"});

        auto rep2 = build_asymmetric_lower_bound(13, 12);
        for (const auto& att : rep2.attestations) CHECK(att.pass);
        CHECK_FALSE(find_fan(rep2.graph, 13).has_value());
        CHECK_FALSE(find_fan(complement(rep2.graph), 12).has_value());

        CHECK_THROWS_AS(build_asymmetric_lower_bound(16, 10), InputError);  // n > 3m/2-3
        CHECK_THROWS_AS(build_asymmetric_lower_bound(5, 6), InputError);    // m > n
    }

    TEST_CASE("lemma-3 tightness construction") {
        auto rep = build_lemma3_tightness(4);
        CHECK(rep.graph.n() == 16);  // 9*4/2 - 2
        CHECK(rep.block("V_0").size() == 6);
        for (const auto& att : rep.attestations) CHECK(att.pass);
        check_partition(rep, {"V_0", "U_1", "U_2", "U_3", "x_0"});
        check_partition(rep, {"V_1", "V_2", "V_3", "U_1", "U_2", "U_3", "x_0"});

        const VertexSet& v0 = rep.block("V_0");
        for (int v : v0) CHECK(rep.graph.degree(v) - int(v0.size() - 1) == 4);

        // x_0 joined to all of V_0 and nothing else
        int x0 = rep.block("x_0").front();
        CHECK(rep.graph.degree(x0) == 6);
        for (int v : v0) CHECK(rep.graph.has_edge(x0, v));

        // outside set is independent
        VertexSet outside;
        for (const char* name : {"U_1", "U_2", "U_3", "x_0"})
            for (int v : rep.block(name)) outside.push_back(v);
        for (std::size_t i = 0; i < outside.size(); ++i)
            for (std::size_t j = i + 1; j < outside.size(); ++j)
                CHECK_FALSE(rep.graph.has_edge(outside[i], outside[j]));

        auto rep2 = build_lemma3_tightness(2);
        CHECK(rep2.graph.n() == 7);
        CHECK(rep2.block("V_0").size() == 3);
        for (int v : rep2.block("V_0"))
            CHECK(rep2.graph.degree(v) - 2 == 2);

        CHECK_THROWS_AS(build_lemma3_tightness(3), InputError);
        CHECK_THROWS_AS(build_lemma3_tightness(0), InputError);
    }

    TEST_CASE("tightness sharpness: the largest fan centered in V_0 has n-1 blades") {
        for (int n : {2, 4, 6, 8}) {
            auto rep = build_lemma3_tightness(n);
            SimpleGraph co = complement(rep.graph);
            bool reach_nm1 = false;
            for (int v : rep.block("V_0")) {
                if (find_fan_at(rep.graph, v, n - 1)) reach_nm1 = true;
                CHECK_FALSE(find_fan_at(rep.graph, v, n).has_value());
                CHECK_FALSE(find_fan_at(co, v, n).has_value());
            }
            if (n >= 2) CHECK(reach_nm1);
        }
    }
}
