#include <doctest.h>

#include "test_util.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/oracle.hpp"

using namespace tvlab;
using oracle::Engine;

TEST_CASE("vertex cover / independent set on named graphs") {
    CHECK(oracle::min_vertex_cover(make_complete(3)).objective() == 2);
    CHECK(oracle::max_independent_set(make_complete(3)).objective() == 1);
    CHECK(oracle::max_independent_set(make_cycle(5)).objective() == 2);
    CHECK(oracle::min_vertex_cover(make_cycle(5)).objective() == 3);

    Graph pet = make_petersen();
    int expected = testutil::brute_mis(pet);
    CHECK(expected == 4);
    CHECK(oracle::max_independent_set(pet).objective() == expected);
}

TEST_CASE("complementarity |VC| + |MIS| = n, exhaustively for n<=5") {
    for (int n = 0; n <= 5; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            CHECK(oracle::min_vertex_cover(g).objective() +
                      oracle::max_independent_set(g).objective() ==
                  n);
        });
}

TEST_CASE("mis_p1_boost") {
    auto inner = [](const Graph& h) { return oracle::max_independent_set(h); };
    CHECK(oracle::mis_p1_boost(Graph(1), inner).objective() == 1);
    CHECK(oracle::mis_p1_boost(disjoint_union(make_complete(3), make_complete(3)), inner)
              .objective() == 2);
    for (int n = 0; n <= 5; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            CHECK(oracle::mis_p1_boost(g, inner).objective() == testutil::brute_mis(g));
        });
}

TEST_CASE("min FVS / OCT on named graphs") {
    CHECK(oracle::min_fvs(make_complete(4)).objective() == 2);
    CHECK(oracle::min_fvs(make_cycle(4)).objective() == 1);
    CHECK(oracle::min_oct(make_cycle(4)).objective() == 0);

    Graph pet = make_petersen();
    auto ok_fvs = [&](const VertexSet& s) {
        return validate_solution(pet, SolutionTag::FeedbackVertexSet, s, {}).ok;
    };
    auto expected = testutil::brute_min_set(pet, ok_fvs);
    REQUIRE(expected.has_value());
    CHECK(expected->size() == 3);
    CHECK(oracle::min_fvs(pet, Engine::BranchAndBound).objective() == 3);
    CHECK(oracle::min_fvs(pet, Engine::SubsetEnum).objective() == 3);
}

TEST_CASE("the two engines agree, exhaustively for n<=5") {
    for (int n = 0; n <= 5; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            CHECK(oracle::min_fvs(g, Engine::SubsetEnum).objective() ==
                  oracle::min_fvs(g, Engine::BranchAndBound).objective());
            CHECK(oracle::min_oct(g, Engine::SubsetEnum).objective() ==
                  oracle::min_oct(g, Engine::BranchAndBound).objective());
        });
}

TEST_CASE("solutions returned by the engines always validate") {
    genio::SplitMix64 rng(13);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + int(rng.below(8));
        Graph g = genio::random_graph(n, 0.4, rng);
        auto f = oracle::min_fvs(g, Engine::BranchAndBound);
        CHECK(validate_solution(g, SolutionTag::FeedbackVertexSet, f.vertices, {}).ok);
        auto o = oracle::min_oct(g, Engine::BranchAndBound);
        CHECK(validate_solution(g, SolutionTag::OddCycleTransversal, o.vertices, {}).ok);
    }
}

TEST_CASE("min_extension examples") {
    Graph c5 = make_cycle(5);
    auto r = oracle::min_extension(SolutionTag::OddCycleTransversal, c5, {0}, true);
    REQUIRE(r.has_value());
    CHECK(r->vertices == VertexSet{0});

    Graph c4 = make_cycle(4);
    auto ok = [&](const VertexSet& s) {
        return validate_solution(c4, SolutionTag::ConnectedFeedbackVertexSetExt, s, {0, 2}).ok;
    };
    auto expected = testutil::brute_min_set(c4, ok);
    REQUIRE(expected.has_value());
    CHECK(expected->size() == 3);
    auto r2 = oracle::min_extension(SolutionTag::FeedbackVertexSet, c4, {0, 2}, true);
    REQUIRE(r2.has_value());
    CHECK(r2->objective() == 3);

    genio::SplitMix64 rng(17);
    for (int t = 0; t < 30; ++t) {
        Graph g = genio::random_graph(6, 0.5, rng);
        auto ext = oracle::min_extension(SolutionTag::VertexCover, g, {}, false);
        REQUIRE(ext.has_value());
        CHECK(ext->objective() == oracle::min_vertex_cover(g).objective());
    }
}

TEST_CASE("min_extension matches brute force on random connected instances") {
    genio::SplitMix64 rng(23);
    for (int t = 0; t < 120; ++t) {
        int n = 2 + int(rng.below(7));
        Graph g = genio::random_graph(n, 0.5, rng);
        VertexSet w;
        for (int v = 0; v < n; ++v)
            if (rng.below(4) == 0) w.push_back(v);
        for (auto base : {SolutionTag::VertexCover, SolutionTag::FeedbackVertexSet,
                          SolutionTag::OddCycleTransversal}) {
            for (bool conn : {false, true}) {
                SolutionTag check_tag = base;
                if (conn)
                    check_tag = base == SolutionTag::VertexCover
                                    ? SolutionTag::ConnectedVertexCoverExt
                                : base == SolutionTag::FeedbackVertexSet
                                    ? SolutionTag::ConnectedFeedbackVertexSetExt
                                    : SolutionTag::ConnectedOddCycleTransversalExt;
                auto ok = [&](const VertexSet& s) {
                    return validate_solution(g, check_tag, s, w).ok;
                };
                auto expected = testutil::brute_min_set(g, ok);
                auto got = oracle::min_extension(base, g, w, conn);
                REQUIRE(expected.has_value() == got.has_value());
                if (expected) CHECK(int(expected->size()) == got->objective());
                if (got) CHECK(validate_solution(g, check_tag, got->vertices, w).ok);
            }
        }
    }
}

TEST_CASE("connected variants never beat the plain ones; complementarity holds") {
    genio::SplitMix64 rng(83);
    for (int t = 0; t < 80; ++t) {
        int n = 2 + int(rng.below(7));
        Graph g = genio::random_graph(n, 0.5, rng);
        VertexSet w;
        for (int v = 0; v < n; ++v)
            if (rng.below(5) == 0) w.push_back(v);
        for (auto base : {SolutionTag::VertexCover, SolutionTag::FeedbackVertexSet,
                          SolutionTag::OddCycleTransversal}) {
            auto plain = oracle::min_extension(base, g, w, false);
            auto conn = oracle::min_extension(base, g, w, true);
            REQUIRE(plain.has_value());
            if (conn) CHECK(conn->objective() >= plain->objective());
        }
        // complementarity of the max-side formulations
        CHECK(oracle::min_fvs(g).objective() ==
              n - oracle::max_induced_forest(g, {}, false)->objective());
        CHECK(oracle::min_oct(g).objective() ==
              n - oracle::max_induced_bipartite(g, {}, false)->objective());
    }
}

TEST_CASE("infeasible connected extension is reported") {
    Graph two_triangles = disjoint_union(make_complete(3), make_complete(3));
    CHECK_FALSE(
        oracle::min_extension(SolutionTag::FeedbackVertexSet, two_triangles, {}, true).has_value());
    // and confirmed by exhaustive search
    auto ok = [&](const VertexSet& s) {
        return validate_solution(two_triangles, SolutionTag::ConnectedFeedbackVertexSetExt, s, {})
            .ok;
    };
    CHECK_FALSE(testutil::brute_min_set(two_triangles, ok).has_value());
}

TEST_CASE("max induced forest / bipartite") {
    CHECK(oracle::max_induced_forest(make_complete(4), {}, false)->objective() == 2);
    CHECK(oracle::max_induced_bipartite(make_cycle(4), {}, false)->objective() == 4);

    // derived by brute force: largest induced forest of C6 with connected complement
    Graph c6 = make_cycle(6);
    int expected = testutil::brute_max_size(c6, [&](const VertexSet& s) {
        if (!validate_solution(c6, SolutionTag::MaxInducedForest, s, {}).ok) return false;
        return is_connected_subset(c6, set_difference(c6.vertices(), s));
    });
    CHECK(expected == 5);
    CHECK(oracle::max_induced_forest(c6, {}, true)->objective() == expected);
}

TEST_CASE("small connected dominating set") {
    CHECK(oracle::small_connected_dominating_set(make_complete(6), 0) == VertexSet{0});
    CHECK(oracle::small_connected_dominating_set(make_star(4), 1) == VertexSet{0});
    CHECK(oracle::small_connected_dominating_set(make_path(5), 0) == VertexSet{1, 2, 3});
    CHECK_THROWS_AS(oracle::small_connected_dominating_set(disjoint_union(Graph(1), Graph(1)), 0),
                    std::invalid_argument);
    // long path: no dominating clique and no 3-vertex connected dominating set
    CHECK_THROWS_AS(oracle::small_connected_dominating_set(make_path(12), 0),
                    oracle::OutOfClassError);
}

TEST_CASE("double-neighbor reduction") {
    // j = {y} only: nothing removed
    Graph star = make_star(3);
    auto r = oracle::reduce_by_double_neighbors(star, {0}, 0);
    CHECK(r.removed.empty());
    CHECK(r.graph.vertex_count() == 4);

    // u in j with two adjacent neighbors gets removed
    // y = 0 adjacent to 1,2,3; u = 4 adjacent to 1,2 with 1-2 an edge
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 4}});
    auto r2 = oracle::reduce_by_double_neighbors(g, {0, 4}, 0);
    CHECK(r2.removed == VertexSet{4});
    CHECK(r2.graph.vertex_count() == 4);

    CHECK_THROWS_AS(oracle::reduce_by_double_neighbors(g, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("double-neighbor reduction preserves connected cover optima") {
    genio::SplitMix64 rng(31);
    int done = 0;
    while (done < 60) {
        // build a cover-complete-style instance: core + dominating y + pendant set
        int core = 2 + int(rng.below(4));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < core; ++u)
            for (int v = u + 1; v < core; ++v)
                if (rng.below(2)) edges.push_back({u, v});
        int y = core;
        for (int u = 0; u < core; ++u) edges.push_back({u, y});
        int extra = 1 + int(rng.below(2));
        int n = core + 1 + extra;
        for (int j = core + 1; j < n; ++j) {
            int deg = 1 + int(rng.below(uint64_t(core)));
            for (int d = 0; d < deg; ++d) edges.push_back({int(rng.below(uint64_t(core))), j});
        }
        Graph g = Graph::from_edges(n, edges);
        VertexSet jset{y};
        for (int j = core + 1; j < n; ++j) jset.push_back(j);
        std::sort(jset.begin(), jset.end());
        if (!subset_is_independent(g, Bitset::of(n, jset))) continue;
        if (!subset_is_connected(g, g.full_set())) continue;

        auto red = oracle::reduce_by_double_neighbors(g, jset, y);
        auto direct = oracle::min_extension(SolutionTag::VertexCover, g, jset, true);
        VertexSet jrem_w = red.j_remaining_new;
        auto reduced = oracle::min_extension(SolutionTag::VertexCover, red.graph, jrem_w, true);
        REQUIRE(direct.has_value() == reduced.has_value());
        if (direct)
            CHECK(direct->objective() == reduced->objective() + int(red.removed.size()));
        ++done;
    }
}

TEST_CASE("cvc extension pipeline on named graphs") {
    const auto& sub = oracle::SubroutineProvider::oracle_backed();
    auto k3 = oracle::cvc_extension_pipeline(make_complete(3), {}, 0, sub);
    REQUIRE(k3.has_value());
    CHECK(k3->objective() == 2);

    auto p5 = oracle::cvc_extension_pipeline(make_path(5), {}, 0, sub);
    REQUIRE(p5.has_value());
    CHECK(p5->vertices == VertexSet{1, 2, 3});
}

TEST_CASE("pipeline matches the oracle on random (P1+P5)-free graphs") {
    const auto& sub = oracle::SubroutineProvider::oracle_backed();
    genio::SplitMix64 rng(37);
    int done = 0;
    while (done < 40) {
        int n = 4 + int(rng.below(7));
        genio::GeneratorSpec spec;
        spec.cls = genio::GraphClass::Sp1P5Free;
        spec.s = 1;
        spec.n = n;
        spec.density = 0.5;
        spec.seed = rng.next();
        Graph g = genio::random_in_class(spec);
        if (!subset_is_connected(g, g.full_set())) continue;
        VertexSet w;
        for (int v = 0; v < n; ++v)
            if (rng.below(4) == 0) w.push_back(v);
        auto a = oracle::cvc_extension_pipeline(g, w, 1, sub);
        auto b = oracle::min_extension(SolutionTag::VertexCover, g, w, true);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->objective() == b->objective());
        ++done;
    }
}

TEST_CASE("pipeline with exhaustive connector enumeration agrees on a tiny instance") {
    const auto& sub = oracle::SubroutineProvider::oracle_backed();
    oracle::PipelineOptions opts;
    opts.enumerate_connector_paths = true;
    Graph g = make_path(5);
    auto a = oracle::cvc_extension_pipeline(g, {}, 0, sub, opts);
    auto b = oracle::cvc_extension_pipeline(g, {}, 0, sub);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->objective() == b->objective());
}

TEST_CASE("budget exhaustion raises") {
    oracle::SearchBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(oracle::min_fvs(make_petersen(), Engine::BranchAndBound, tiny),
                    oracle::BudgetExceeded);
}

TEST_CASE("extension preprocessing splits off the relevant component") {
    Graph g = disjoint_union(make_complete(3), make_path(2));
    auto has_no_cycle = [](const Graph& c) { return is_forest(c).forest; };
    auto prep = oracle::prepare_extension_input(g, {}, has_no_cycle);
    CHECK_FALSE(prep.infeasible);
    CHECK_FALSE(prep.trivial);
    CHECK(prep.sub.vertex_count() == 3);

    auto prep2 = oracle::prepare_extension_input(make_path(4), {}, has_no_cycle);
    CHECK(prep2.trivial);

    Graph two = disjoint_union(make_complete(3), make_complete(3));
    CHECK(oracle::prepare_extension_input(two, {}, has_no_cycle).infeasible);

    // W in one component, cycle in the other
    Graph mix = disjoint_union(make_complete(3), make_path(2));
    auto prep3 = oracle::prepare_extension_input(mix, {4}, has_no_cycle);
    CHECK(prep3.infeasible);
}
