#include <doctest.h>

#include "test_util.hpp"
#include "tvlab/cograph.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/oracle.hpp"
#include "tvlab/pattern.hpp"
#include "tvlab/sp1p3.hpp"
#include "tvlab/verify.hpp"

using namespace tvlab;

namespace {

Graph random_connected(genio::GraphClass cls, int s, int n, double density,
                       genio::SplitMix64& seeder) {
    while (true) {
        genio::GeneratorSpec spec;
        spec.cls = cls;
        spec.s = s;
        spec.n = n;
        spec.density = density;
        spec.seed = seeder.next();
        Graph g = genio::random_in_class(spec);
        if (subset_is_connected(g, g.full_set())) return g;
    }
}

pattern::LinearForestPattern cls_pattern(int s) {
    std::vector<int> p(s, 1);
    p.push_back(3);
    return pattern::LinearForestPattern(p);
}

}  // namespace

TEST_CASE("component size threshold") {
    CHECK(sp1p3::component_size_threshold(0) == 3);
    CHECK(sp1p3::component_size_threshold(2) == 3);
    CHECK(sp1p3::component_size_threshold(4) == 7);
    CHECK_THROWS_AS(sp1p3::component_size_threshold(-1), std::invalid_argument);
}

TEST_CASE("component structure validator") {
    // P3 itself is not P3-free, so the s=0 precondition fails; in-class
    // bipartite P3-free graphs never have a component on three vertices
    CHECK_THROWS_AS(sp1p3::satisfies_component_structure(make_path(3), 0),
                    std::invalid_argument);
    CHECK(sp1p3::satisfies_component_structure(make_path(2), 0));
    CHECK(sp1p3::satisfies_component_structure(make_path(3), 1));
    // P3+P3 contains P1+P3, so the s=1 precondition fails
    CHECK_THROWS_AS(
        sp1p3::satisfies_component_structure(disjoint_union(make_path(3), make_path(3)), 1),
        std::invalid_argument);
    CHECK_THROWS_AS(sp1p3::satisfies_component_structure(make_complete(3), 1),
                    std::invalid_argument);  // not bipartite
    // exhaustive: every bipartite in-class graph satisfies the lemma (n<=6)
    for (int s = 0; s <= 2; ++s) {
        auto pat = cls_pattern(s);
        for (int n = 1; n <= 6; ++n)
            genio::enumerate_all_graphs(n, [&](const Graph& g) {
                if (!is_bipartite(g).bipartite || !pattern::is_hfree(g, pat)) return;
                CHECK(sp1p3::satisfies_component_structure(g, s));
            });
    }
}

TEST_CASE("tree internal-vertex validator") {
    CHECK(sp1p3::satisfies_internal_vertex_bound(make_star(5), 1));
    CHECK(sp1p3::satisfies_internal_vertex_bound(make_path(3), 1));
    CHECK_THROWS_AS(sp1p3::satisfies_internal_vertex_bound(make_cycle(4), 1),
                    std::invalid_argument);
    // every in-class labeled tree on <= 7 vertices satisfies the bound (the
    // acceptance suite extends this to n = 12 isomorphism-free)
    for (int s = 1; s <= 2; ++s) {
        auto pat = cls_pattern(s);
        for (int n = 1; n <= 7; ++n)
            verify::for_each_labeled_tree(n, [&](const Graph& t) {
                if (!pattern::is_hfree(t, pat)) return;
                CHECK(sp1p3::satisfies_internal_vertex_bound(t, s));
            });
    }
}

TEST_CASE("connector set") {
    Graph p5 = make_path(5);
    CHECK(sp1p3::connector_set(p5, {1, 2}, 1).empty());  // already connected
    VertexSet r = sp1p3::connector_set(p5, {0, 4}, 1);
    CHECK(r == VertexSet{1, 2, 3});
    CHECK(is_connected_subset(p5, set_union(r, {0, 4})));
    // brute force: the unique minimum connector is the three middle vertices
    auto minimal = testutil::brute_min_set(p5, [&](const VertexSet& cand) {
        return is_connected_subset(p5, set_union(cand, {0, 4}));
    });
    REQUIRE(minimal.has_value());
    CHECK(*minimal == VertexSet{1, 2, 3});

    // randomized: the bound 2s^2-2s+3 holds on in-class inputs
    genio::SplitMix64 rng(43);
    for (int s : {1, 2}) {
        int bound = 2 * s * s - 2 * s + 3;
        for (int t = 0; t < 60; ++t) {
            int n = 5 + int(rng.below(7));
            Graph g = random_connected(genio::GraphClass::Sp1P3Free, s, n, 0.5, rng);
            VertexSet u;
            for (int v = 0; v < n; ++v)
                if (rng.below(3) == 0) u.push_back(v);
            VertexSet rr = sp1p3::connector_set(g, u, s);
            CHECK(int(rr.size()) <= bound);
            CHECK(is_connected_subset(g, set_union(rr, u)));
        }
    }
}

TEST_CASE("plain solvers on named graphs") {
    CHECK(sp1p3::min_fvs(make_cycle(4), 1).objective() == 1);
    CHECK(sp1p3::min_fvs(make_complete(5), 1).objective() == 3);
    CHECK(sp1p3::min_fvs(make_complete(5), 2).objective() == 3);
    CHECK(sp1p3::min_oct(make_complete(4), 1).objective() == 2);
    CHECK(sp1p3::min_oct(make_complete_bipartite(3, 3), 1).objective() == 0);
    CHECK_THROWS_AS(sp1p3::min_fvs(disjoint_union(Graph(1), make_path(3)), 1),
                    oracle::OutOfClassError);
}

TEST_CASE("extension solvers on named graphs") {
    auto a = sp1p3::min_cfvs_extension(make_cycle(4), {}, 1);
    REQUIRE(a.has_value());
    CHECK(a->objective() == 1);

    Graph c4 = make_cycle(4);
    auto expected = testutil::brute_min_set(c4, [&](const VertexSet& s) {
        return validate_solution(c4, SolutionTag::ConnectedFeedbackVertexSetExt, s, {0, 2}).ok;
    });
    REQUIRE(expected.has_value());
    CHECK(expected->size() == 3);
    auto b = sp1p3::min_cfvs_extension(c4, {0, 2}, 1);
    REQUIRE(b.has_value());
    CHECK(b->objective() == 3);

    auto c5 = sp1p3::min_coct_extension(make_cycle(5), {}, 1);
    REQUIRE(c5.has_value());
    CHECK(c5->objective() == 1);

    Graph k4 = make_complete(4);
    auto k4exp = testutil::brute_min_set(k4, [&](const VertexSet& s) {
        return validate_solution(k4, SolutionTag::ConnectedOddCycleTransversalExt, s, {0}).ok;
    });
    REQUIRE(k4exp.has_value());
    CHECK(k4exp->size() == 2);
    auto d = sp1p3::min_coct_extension(k4, {0}, 1);
    REQUIRE(d.has_value());
    CHECK(d->objective() == 2);
    CHECK(set_contains(d->vertices, 0));
}

TEST_CASE("all four solvers match the oracle, exhaustively for n<=5, s=1") {
    auto pat = cls_pattern(1);
    genio::SplitMix64 rng(47);
    for (int n = 1; n <= 5; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            if (!subset_is_connected(g, g.full_set())) return;
            if (!pattern::is_hfree(g, pat)) return;
            CHECK(sp1p3::min_fvs(g, 1).objective() == oracle::min_fvs(g).objective());
            CHECK(sp1p3::min_oct(g, 1).objective() == oracle::min_oct(g).objective());
            VertexSet w;
            for (int v = 0; v < n; ++v)
                if (rng.below(3) == 0) w.push_back(v);
            auto a = sp1p3::min_cfvs_extension(g, w, 1);
            auto b = oracle::min_extension(SolutionTag::FeedbackVertexSet, g, w, true);
            REQUIRE(a.has_value() == b.has_value());
            if (a) CHECK(a->objective() == b->objective());
            auto c = sp1p3::min_coct_extension(g, w, 1);
            auto d = oracle::min_extension(SolutionTag::OddCycleTransversal, g, w, true);
            REQUIRE(c.has_value() == d.has_value());
            if (c) CHECK(c->objective() == d->objective());
        });
}

TEST_CASE("solvers match the oracle on random in-class instances, s=2") {
    genio::SplitMix64 rng(53);
    for (int t = 0; t < 25; ++t) {
        int n = 5 + int(rng.below(5));
        Graph g = random_connected(genio::GraphClass::Sp1P3Free, 2, n, 0.5, rng);
        CHECK(sp1p3::min_fvs(g, 2).objective() == oracle::min_fvs(g).objective());
        CHECK(sp1p3::min_oct(g, 2).objective() == oracle::min_oct(g).objective());
        VertexSet w;
        for (int v = 0; v < n; ++v)
            if (rng.below(4) == 0) w.push_back(v);
        auto a = sp1p3::min_cfvs_extension(g, w, 2);
        auto b = oracle::min_extension(SolutionTag::FeedbackVertexSet, g, w, true);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->objective() == b->objective());
        auto c = sp1p3::min_coct_extension(g, w, 2);
        auto d = oracle::min_extension(SolutionTag::OddCycleTransversal, g, w, true);
        REQUIRE(c.has_value() == d.has_value());
        if (c) CHECK(c->objective() == d->objective());
    }
}

TEST_CASE("s=3 spot checks on C9") {
    // C9 is (3P1+P3)-free: outside N[P3] only four consecutive vertices
    // remain, whose largest independent set has two vertices
    Graph c9 = make_cycle(9);
    CHECK(pattern::is_hfree(c9, cls_pattern(3)));
    CHECK_FALSE(pattern::is_hfree(c9, cls_pattern(2)));
    CHECK(sp1p3::min_fvs(c9, 3).objective() == oracle::min_fvs(c9).objective());
    CHECK(sp1p3::min_oct(c9, 3).objective() == oracle::min_oct(c9).objective());
    auto a = sp1p3::min_cfvs_extension(c9, {0, 4}, 3);
    auto b = oracle::min_extension(SolutionTag::FeedbackVertexSet, c9, {0, 4}, true);
    REQUIRE(a.has_value());
    CHECK(a->objective() == b->objective());
    auto c = sp1p3::min_coct_extension(c9, {2}, 3);
    auto d = oracle::min_extension(SolutionTag::OddCycleTransversal, c9, {2}, true);
    REQUIRE(c.has_value());
    CHECK(c->objective() == d->objective());
}

TEST_CASE("s=0 delegation equals the cograph module on cluster graphs") {
    genio::SplitMix64 rng(59);
    for (int t = 0; t < 30; ++t) {
        // random disjoint cliques (P3-free)
        int pieces = 1 + int(rng.below(3));
        Graph g(0);
        for (int p = 0; p < pieces; ++p)
            g = disjoint_union(g, make_complete(1 + int(rng.below(4))));
        CHECK(sp1p3::min_fvs(g, 0).objective() == cograph::min_fvs(g).objective());
        CHECK(sp1p3::min_oct(g, 0).objective() == cograph::min_oct(g).objective());
    }
}

TEST_CASE("case trace records the winning candidate") {
    sp1p3::CaseTrace trace;
    Graph g = make_cycle(4);
    auto sol = sp1p3::min_fvs(g, 1, oracle::SubroutineProvider::oracle_backed(), &trace);
    REQUIRE_FALSE(trace.candidates.empty());
    size_t best = 0;
    for (const auto& c : trace.candidates) best = std::max(best, c.vertices.size());
    CHECK(int(best) == g.vertex_count() - sol.objective());
}

TEST_CASE("infeasible extension instances are reported") {
    Graph two = disjoint_union(make_complete(3), make_complete(3));
    CHECK_FALSE(sp1p3::min_cfvs_extension(two, {}, 1).has_value());
    Graph spread = disjoint_union(make_complete(3), make_complete(3));
    CHECK_FALSE(sp1p3::min_coct_extension(spread, {}, 1).has_value());
}
