#include <doctest.h>

#include "test_util.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/run.hpp"
#include "tvlab/verify.hpp"

using namespace tvlab;

TEST_CASE("run_solve basic dispatch") {
    run::SolveRequest req;
    req.g = make_cycle(4);
    req.problem = "oct";
    req.klass = "p4free";
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 0);
    CHECK(out.report["solution"]["objective"] == 0);
    CHECK(out.report["class_certified"] == "p4free");
    CHECK(out.report["algorithm"] == "cograph-dp");
}

TEST_CASE("specialized engine on an out-of-class instance exits 3 with a certificate") {
    run::SolveRequest req;
    req.g = make_path(4);
    req.problem = "oct";
    req.klass = "p4free";
    req.engine = "specialized";
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 3);
    CHECK(out.report["certificate"].size() == 4);
}

TEST_CASE("auto class certifies the tightest class") {
    // C7 is (2P1+P3)-free: after removing the closed neighborhood of any P3
    // only two adjacent vertices remain
    run::SolveRequest req;
    req.g = make_cycle(7);
    req.problem = "fvs";
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 0);
    CHECK(out.report["class_certified"] == "sp1p3:2");
    CHECK(out.report["solution"]["objective"] == 1);
}

TEST_CASE("auto class falls back to the oracle outside the known classes") {
    run::SolveRequest req;
    req.g = make_cycle(10);  // contains P4 and 3P1+P3
    req.problem = "fvs";
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 0);
    CHECK(out.report["class_certified"] == "none");
    CHECK(out.report["algorithm"] == "oracle");
    CHECK(out.report["solution"]["objective"] == 1);
}

TEST_CASE("infeasible instances exit 2") {
    run::SolveRequest req;
    req.g = disjoint_union(make_complete(3), make_complete(3));
    req.problem = "cfvs";
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 2);
    CHECK(out.report["solution"]["feasible"] == false);
}

TEST_CASE("both engines agree across problems") {
    genio::SplitMix64 rng(73);
    for (auto problem : {"vc", "cvc", "fvs", "cfvs", "oct", "coct"}) {
        run::SolveRequest req;
        genio::SplitMix64 sub(rng.next());
        req.g = genio::random_cograph(8, sub);
        req.problem = problem;
        req.engine = "both";
        auto out = run::run_solve(req);
        CHECK((out.exit_code == 0 || out.exit_code == 2));
        if (out.exit_code == 0)
            CHECK(out.report["solution"]["objective"] == out.report["oracle_objective"]);
    }
}

TEST_CASE("w out of range is an input error") {
    run::SolveRequest req;
    req.g = make_cycle(4);
    req.problem = "oct";
    req.w = {9};
    auto out = run::run_solve(req);
    CHECK(out.exit_code == 4);
}

TEST_CASE("graph text sniffing") {
    Graph a = run::parse_graph_text("2 1\n0 1\n");
    CHECK(a.edge_count() == 1);
    Graph b = run::parse_graph_text("A_");
    CHECK(b.edge_count() == 1);
}

TEST_CASE("instance digest is stable") {
    CHECK(run::instance_digest(make_complete(2)) == run::instance_digest(make_complete(2)));
    CHECK(run::instance_digest(make_complete(2)) != run::instance_digest(Graph(2)));
}

TEST_CASE("reports are byte-identical across runs (modulo wall time)") {
    run::SolveRequest req;
    req.g = make_petersen();
    req.problem = "coct";
    req.engine = "oracle";
    req.seed = 99;
    auto a = run::run_solve(req);
    auto b = run::run_solve(req);
    a.report.erase("wall_time_ms");
    b.report.erase("wall_time_ms");
    CHECK(a.report.dump() == b.report.dump());
}

TEST_CASE("tree enumeration helpers") {
    // labeled tree counts: n^(n-2)
    uint64_t count = 0;
    verify::for_each_labeled_tree(5, [&](const Graph& t) {
        ++count;
        CHECK(t.edge_count() == 4);
        CHECK(is_forest(t).forest);
        CHECK(subset_is_connected(t, t.full_set()));
    });
    CHECK(count == 125);

    // nonisomorphic tree counts (this sequence backs the lemma suite at n=12)
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n)
        CHECK(int(verify::nonisomorphic_trees(n).size()) == expected[n - 1]);
}

TEST_CASE("small verify suites pass") {
    verify::SuiteParams p;
    p.n = 4;
    p.w_samples = 2;
    CHECK(verify::run_suite("p4free-exhaustive", p).pass());
    p.s = 1;
    CHECK(verify::run_suite("sp1p3-exhaustive", p).pass());
    verify::SuiteParams q;
    q.count = 20;
    CHECK(verify::run_suite("lemma-contract", q).pass());
    CHECK_THROWS_AS(verify::run_suite("no-such-suite", {}), std::invalid_argument);
}
