#include <doctest.h>

#include "test_util.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/pattern.hpp"

using namespace tvlab;
using pattern::LinearForestPattern;

TEST_CASE("pattern parsing and printing") {
    CHECK(pattern::parse_pattern("2P1+P3").paths == std::vector<int>{3, 1, 1});
    CHECK(pattern::parse_pattern("P2+P5").paths == std::vector<int>{5, 2});
    CHECK(pattern::parse_pattern("P6").paths == std::vector<int>{6});
    CHECK(pattern::parse_pattern(" p3 + 2p1 ").paths == std::vector<int>{3, 1, 1});
    CHECK(pattern::to_string(LinearForestPattern({3, 1, 1})) == "2P1+P3");
    CHECK(pattern::to_string(LinearForestPattern({5, 2})) == "P2+P5");
    CHECK_THROWS_AS(pattern::parse_pattern(""), std::invalid_argument);
    CHECK_THROWS_AS(pattern::parse_pattern("P0"), std::invalid_argument);
    CHECK_THROWS_AS(pattern::parse_pattern("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(pattern::parse_pattern("P3+"), std::invalid_argument);
    CHECK(LinearForestPattern({1, 3, 1}).total_order() == 5);
}

TEST_CASE("find_induced on named graphs") {
    auto whole = pattern::find_induced(make_path(4), LinearForestPattern({4}));
    REQUIRE(whole.has_value());
    CHECK(whole->assignment[0] == std::vector<int>{0, 1, 2, 3});

    CHECK_FALSE(pattern::find_induced(make_cycle(4), LinearForestPattern({4})).has_value());

    Graph k1p3 = disjoint_union(Graph(1), make_path(3));
    auto copy = pattern::find_induced(k1p3, LinearForestPattern({3, 1}));
    REQUIRE(copy.has_value());
    CHECK(pattern::is_valid_copy(k1p3, LinearForestPattern({3, 1}), *copy));
}

TEST_CASE("C7 has no induced P2+P5 (checked against the naive enumerator)") {
    Graph c7 = make_cycle(7);
    CHECK_FALSE(testutil::naive_has_induced(c7, {5, 2}));
    CHECK(pattern::is_hfree(c7, LinearForestPattern({5, 2})));
    // C6 cannot even fit the seven vertices
    CHECK(pattern::is_hfree(make_cycle(6), LinearForestPattern({5, 2})));
}

TEST_CASE("is_hfree on named graphs") {
    for (int s = 0; s <= 3; ++s) {
        std::vector<int> p(s, 1);
        p.push_back(3);
        CHECK(pattern::is_hfree(make_complete(6), LinearForestPattern(p)));
    }
    CHECK(pattern::is_hfree(make_cycle(4), LinearForestPattern({3, 1})));
    Graph star_plus = disjoint_union(make_star(5), Graph(1));
    CHECK_FALSE(pattern::is_hfree(star_plus, LinearForestPattern({3, 1})));
}

TEST_CASE("cograph recognition") {
    auto p4 = pattern::is_cograph(make_path(4));
    REQUIRE_FALSE(p4.is_cograph);
    CHECK(p4.p4 == std::vector<int>{0, 1, 2, 3});
    CHECK(pattern::is_cograph(make_cycle(4)).is_cograph);
    CHECK(pattern::is_cograph(make_star(3)).is_cograph);
}

namespace {

std::vector<std::vector<int>> patterns_up_to(int total) {
    // all multisets of path orders with sum <= total, descending form
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (!cur.empty()) out.push_back(cur);
        for (int k = std::min(remaining, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

}  // namespace

TEST_CASE("exhaustive agreement with the naive enumerator, n<=5") {
    auto pats = patterns_up_to(5);
    for (int n = 0; n <= 5; ++n) {
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            for (const auto& p : pats) {
                bool naive = testutil::naive_has_induced(g, p);
                auto found = pattern::find_induced(g, LinearForestPattern(p));
                REQUIRE(naive == found.has_value());
                if (found) REQUIRE(pattern::is_valid_copy(g, LinearForestPattern(p), *found));
            }
        });
    }
}

TEST_CASE("random agreement with the naive enumerator, n=7") {
    genio::SplitMix64 rng(3);
    std::vector<std::vector<int>> pats{{3, 1}, {3, 1, 1}, {5}, {5, 2}, {6}, {4}, {3, 3}, {2, 2, 2}};
    for (int t = 0; t < 300; ++t) {
        Graph g = genio::random_graph(7, 0.2 + 0.1 * double(rng.below(6)), rng);
        for (const auto& p : pats) {
            bool naive = testutil::naive_has_induced(g, p);
            auto found = pattern::find_induced(g, LinearForestPattern(p));
            REQUIRE(naive == found.has_value());
            if (found) REQUIRE(pattern::is_valid_copy(g, LinearForestPattern(p), *found));
        }
    }
}

TEST_CASE("hereditariness spot check: induced subgraphs of H-free graphs stay H-free") {
    genio::SplitMix64 rng(5);
    auto pat = LinearForestPattern({3, 1});
    int done = 0;
    while (done < 40) {
        Graph g = genio::random_graph(8, 0.5, rng);
        if (!pattern::is_hfree(g, pat)) continue;
        uint64_t mask = rng.below(256);
        VertexSet keep;
        for (int v = 0; v < 8; ++v)
            if (mask >> v & 1) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        CHECK(pattern::is_hfree(sub.graph, pat));
        ++done;
    }
}

TEST_CASE("deterministic lexicographically-least assignment") {
    // two disjoint P3s: the copy must pick the lexicographically first one
    Graph g = disjoint_union(make_path(3), make_path(3));
    auto copy = pattern::find_induced(g, LinearForestPattern({3}));
    REQUIRE(copy.has_value());
    CHECK(copy->assignment[0] == std::vector<int>{0, 1, 2});
    // orientation: the least endpoint comes first
    auto p = pattern::find_induced(make_path(5), LinearForestPattern({5}));
    REQUIRE(p.has_value());
    CHECK(p->assignment[0].front() < p->assignment[0].back());
}
