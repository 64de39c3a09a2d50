#include "tvlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "tvlab/cograph.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/oracle.hpp"
#include "tvlab/pattern.hpp"
#include "tvlab/reduction.hpp"
#include "tvlab/run.hpp"
#include "tvlab/sp1p3.hpp"

namespace tvlab::verify {

namespace {

using genio::SplitMix64;
using oracle::SubroutineProvider;

struct Recorder {
    SuiteResult& r;
    void check(bool ok, const Graph& g, const std::string& context) {
        ++r.checked;
        if (ok) return;
        ++r.failures;
        if (r.first_failure.empty())
            r.first_failure = context + "\n" + genio::serialize_edgelist(g);
    }
};

pattern::LinearForestPattern sp1p3_pattern(int s) {
    std::vector<int> p(s, 1);
    p.push_back(3);
    return pattern::LinearForestPattern(p);
}

pattern::LinearForestPattern sp1p5_pattern(int s) {
    std::vector<int> p(s, 1);
    p.push_back(5);
    return pattern::LinearForestPattern(p);
}

bool graph_connected(const Graph& g) { return subset_is_connected(g, g.full_set()); }

VertexSet random_nonempty_subset(const Graph& g, SplitMix64& rng) {
    int n = g.vertex_count();
    VertexSet w;
    while (w.empty()) {
        w.clear();
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) w.push_back(v);
    }
    return w;
}

Graph random_connected_in_class(genio::GraphClass cls, int s, int n, double density,
                                SplitMix64& seeder, int max_tries = 4000) {
    for (int t = 0; t < max_tries; ++t) {
        genio::GeneratorSpec spec;
        spec.cls = cls;
        spec.s = s;
        spec.n = n;
        // escalate the density when connectivity keeps failing; very sparse
        // classes (P3-free is a union of cliques) only connect when dense
        spec.density = std::min(1.0, density + 0.1 * (t / 50));
        spec.seed = seeder.next();
        Graph g = genio::random_in_class(spec);
        if (graph_connected(g)) return g;
    }
    throw std::runtime_error("could not sample a connected in-class graph");
}

std::string describe(const std::string& what, const VertexSet& w) {
    std::ostringstream os;
    os << what << " w={";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------- suites

SuiteResult suite_p4free_exhaustive(const SuiteParams& p) {
    SuiteResult res{"p4free-exhaustive"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    int wsamples = p.w_samples >= 0 ? p.w_samples : 30;
    SplitMix64 rng(p.seed);
    for (int n = 1; n <= nmax; ++n) {
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            if (!graph_connected(g)) return;
            if (!pattern::is_cograph(g).is_cograph) return;
            int fvs_dp = cograph::min_fvs(g).objective();
            int fvs_or = oracle::min_fvs(g).objective();
            rec.check(fvs_dp == fvs_or, g, "fvs dp=" + std::to_string(fvs_dp) +
                                                " oracle=" + std::to_string(fvs_or));
            int oct_dp = cograph::min_oct(g).objective();
            int oct_or = oracle::min_oct(g).objective();
            rec.check(oct_dp == oct_or, g, "oct dp=" + std::to_string(oct_dp) +
                                                " oracle=" + std::to_string(oct_or));
            std::vector<VertexSet> ws{{}};
            for (int i = 0; i < wsamples; ++i) ws.push_back(random_nonempty_subset(g, rng));
            for (const auto& w : ws) {
                auto a = cograph::min_cfvs_extension(g, w);
                auto b = oracle::min_extension(SolutionTag::FeedbackVertexSet, g, w, true);
                bool ok = a.has_value() == b.has_value() &&
                          (!a || a->objective() == b->objective());
                rec.check(ok, g, describe("cfvs-ext", w));
                auto c = cograph::min_coct_extension(g, w);
                auto d = oracle::min_extension(SolutionTag::OddCycleTransversal, g, w, true);
                ok = c.has_value() == d.has_value() && (!c || c->objective() == d->objective());
                rec.check(ok, g, describe("coct-ext", w));
            }
        });
    }
    return res;
}

void sp1p3_check_instance(Recorder& rec, const Graph& g, int s, int wsamples, SplitMix64& rng,
                          bool run_coct) {
    int fvs_sp = sp1p3::min_fvs(g, s).objective();
    int fvs_or = oracle::min_fvs(g).objective();
    rec.check(fvs_sp == fvs_or, g,
              "s=" + std::to_string(s) + " fvs sp=" + std::to_string(fvs_sp) +
                  " oracle=" + std::to_string(fvs_or));
    int oct_sp = sp1p3::min_oct(g, s).objective();
    int oct_or = oracle::min_oct(g).objective();
    rec.check(oct_sp == oct_or, g,
              "s=" + std::to_string(s) + " oct sp=" + std::to_string(oct_sp) +
                  " oracle=" + std::to_string(oct_or));
    std::vector<VertexSet> ws{{}};
    for (int i = 0; i < wsamples; ++i) ws.push_back(random_nonempty_subset(g, rng));
    for (const auto& w : ws) {
        auto a = sp1p3::min_cfvs_extension(g, w, s);
        auto b = oracle::min_extension(SolutionTag::FeedbackVertexSet, g, w, true);
        rec.check(a.has_value() == b.has_value() && (!a || a->objective() == b->objective()), g,
                  describe("s=" + std::to_string(s) + " cfvs-ext", w));
        if (run_coct) {
            auto c = sp1p3::min_coct_extension(g, w, s);
            auto d = oracle::min_extension(SolutionTag::OddCycleTransversal, g, w, true);
            rec.check(c.has_value() == d.has_value() && (!c || c->objective() == d->objective()),
                      g, describe("s=" + std::to_string(s) + " coct-ext", w));
        }
    }
}

SuiteResult suite_sp1p3_exhaustive(const SuiteParams& p) {
    SuiteResult res{"sp1p3-exhaustive"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    int s = p.s >= 0 ? p.s : 1;
    int wsamples = p.w_samples >= 0 ? p.w_samples : 2;
    res.name += "-s" + std::to_string(s);
    SplitMix64 rng(p.seed);
    auto pat = sp1p3_pattern(s);
    for (int n = 1; n <= nmax; ++n) {
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            if (!graph_connected(g)) return;
            if (!pattern::is_hfree(g, pat)) return;
            sp1p3_check_instance(rec, g, s, wsamples, rng, true);
        });
    }
    return res;
}

SuiteResult suite_sp1p3_random(const SuiteParams& p) {
    SuiteResult res{"sp1p3-random"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 11;
    int s = p.s >= 0 ? p.s : 1;
    int count = p.count > 0 ? p.count : 300;
    int wsamples = p.w_samples >= 0 ? p.w_samples : 2;
    res.name += "-s" + std::to_string(s);
    SplitMix64 rng(p.seed);
    for (int i = 0; i < count; ++i) {
        int n = 5 + int(rng.below(uint64_t(nmax - 4)));
        double density = 0.35 + 0.1 * double(rng.below(6));
        Graph g = random_connected_in_class(genio::GraphClass::Sp1P3Free, s, n, density, rng);
        bool run_coct = g.vertex_count() <= std::min(nmax, 10);
        sp1p3_check_instance(rec, g, s, wsamples, rng, run_coct);
    }
    return res;
}

SuiteResult suite_lemma_split(const SuiteParams& p) {
    SuiteResult res{"lemma-split"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    int count = p.count > 0 ? p.count : 200;
    auto check_split = [&](const Graph& g) {
        auto sp = cograph::spanning_split(g);
        bool ok = !sp.x.empty() && !sp.y.empty() &&
                  int(sp.x.size() + sp.y.size()) == g.vertex_count();
        Bitset xb = Bitset::of(g.vertex_count(), sp.x);
        Bitset yb = Bitset::of(g.vertex_count(), sp.y);
        ok = ok && !xb.intersects(yb);
        for (int u : sp.x)
            if (!yb.is_subset_of(g.neighbor_bits(u))) ok = false;
        rec.check(ok, g, "spanning split invariant");
    };
    for (int n = 2; n <= nmax; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            if (!graph_connected(g)) return;
            if (!pattern::is_cograph(g).is_cograph) return;
            check_split(g);
        });
    SplitMix64 rng(p.seed);
    for (int i = 0; i < count; ++i) {
        int n = 4 + int(rng.below(13));  // up to 16
        SplitMix64 sub(rng.next());
        Graph g = genio::random_cograph(n, sub);
        if (!graph_connected(g) || g.vertex_count() < 2) {
            --i;
            continue;
        }
        check_split(g);
    }
    return res;
}

SuiteResult suite_lemma_components(const SuiteParams& p) {
    SuiteResult res{"lemma-components"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    std::vector<int> svals = p.s >= 0 ? std::vector<int>{p.s} : std::vector<int>{0, 1, 2};
    for (int s : svals) {
        auto pat = sp1p3_pattern(s);
        for (int n = 1; n <= nmax; ++n)
            genio::enumerate_all_graphs(n, [&](const Graph& g) {
                if (!is_bipartite(g).bipartite) return;
                if (!pattern::is_hfree(g, pat)) return;
                rec.check(sp1p3::satisfies_component_structure(g, s), g,
                          "component structure s=" + std::to_string(s));
            });
    }
    return res;
}

SuiteResult suite_lemma_tree(const SuiteParams& p) {
    SuiteResult res{"lemma-tree"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 12;
    int prufer_max = std::min(nmax, 9);
    std::vector<int> svals = p.s >= 0 ? std::vector<int>{p.s} : std::vector<int>{0, 1, 2};
    for (int s : svals) {
        auto pat = sp1p3_pattern(s);
        // isomorphism-free coverage of every tree up to nmax
        for (int n = 1; n <= nmax; ++n)
            for (const Graph& t : nonisomorphic_trees(n)) {
                if (!pattern::is_hfree(t, pat)) continue;
                rec.check(sp1p3::satisfies_internal_vertex_bound(t, s), t,
                          "tree internal bound s=" + std::to_string(s));
            }
        // labeled (Prufer) coverage at the sizes where it is affordable
        for (int n = 1; n <= prufer_max; ++n)
            for_each_labeled_tree(n, [&](const Graph& t) {
                if (!pattern::is_hfree(t, pat)) return;
                rec.check(sp1p3::satisfies_internal_vertex_bound(t, s), t,
                          "labeled tree internal bound s=" + std::to_string(s));
            });
    }
    return res;
}

SuiteResult suite_lemma_connector(const SuiteParams& p) {
    SuiteResult res{"lemma-connector"};
    Recorder rec{res};
    int count = p.count > 0 ? p.count : 500;
    std::vector<int> svals = p.s >= 0 ? std::vector<int>{p.s} : std::vector<int>{1, 2};
    SplitMix64 rng(p.seed);
    for (int s : svals) {
        int bound = 2 * s * s - 2 * s + 3;
        for (int i = 0; i < count; ++i) {
            int n = 6 + int(rng.below(7));  // 6..12
            double density = 0.35 + 0.1 * double(rng.below(6));
            Graph g = random_connected_in_class(genio::GraphClass::Sp1P3Free, s, n, density, rng);
            VertexSet u;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng.below(3) == 0) u.push_back(v);
            VertexSet r = sp1p3::connector_set(g, u, s);
            Bitset all = Bitset::of(g.vertex_count(), set_union(r, u));
            bool ok = int(r.size()) <= bound && subset_is_connected(g, all);
            rec.check(ok, g, describe("connector s=" + std::to_string(s), u));
        }
    }
    return res;
}

SuiteResult suite_lemma_contract(const SuiteParams& p) {
    SuiteResult res{"lemma-contract"};
    Recorder rec{res};
    int count = p.count > 0 ? p.count : 500;
    SplitMix64 rng(p.seed);
    struct ClassChoice {
        genio::GraphClass cls;
        int s;
        pattern::LinearForestPattern pat;
    };
    std::vector<ClassChoice> choices{
        {genio::GraphClass::Sp1P3Free, 1, sp1p3_pattern(1)},
        {genio::GraphClass::Sp1P3Free, 2, sp1p3_pattern(2)},
        {genio::GraphClass::Sp1P5Free, 0, sp1p5_pattern(0)},
        {genio::GraphClass::Sp1P5Free, 1, sp1p5_pattern(1)},
    };
    for (int i = 0; i < count; ++i) {
        const auto& ch = choices[i % choices.size()];
        int n = 5 + int(rng.below(8));
        double density = 0.4 + 0.1 * double(rng.below(5));
        Graph g = random_connected_in_class(ch.cls, ch.s, n, density, rng);
        if (g.edge_count() == 0) {
            --i;
            continue;
        }
        // pick a random edge
        int target = int(rng.below(uint64_t(g.edge_count())));
        int eu = -1, ev = -1, idx = 0;
        for (int u = 0; u < g.vertex_count() && eu < 0; ++u)
            for (int v : g.neighbors(u)) {
                if (u >= v) continue;
                if (idx++ == target) {
                    eu = u;
                    ev = v;
                    break;
                }
            }
        auto contracted = contract_edge(g, eu, ev);
        bool ok = graph_connected(contracted.graph) && pattern::is_hfree(contracted.graph, ch.pat);
        rec.check(ok, g, "contract edge (" + std::to_string(eu) + "," + std::to_string(ev) +
                             ") class " + to_string(ch.pat));
    }
    return res;
}

SuiteResult suite_oracle_consistency(const SuiteParams& p) {
    SuiteResult res{"oracle-consistency"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    for (int n = 0; n <= nmax; ++n) {
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            int fvs_a = oracle::min_fvs(g, oracle::Engine::SubsetEnum).objective();
            int fvs_b = oracle::min_fvs(g, oracle::Engine::BranchAndBound).objective();
            rec.check(fvs_a == fvs_b, g,
                      "fvs engines " + std::to_string(fvs_a) + " vs " + std::to_string(fvs_b));
            int oct_a = oracle::min_oct(g, oracle::Engine::SubsetEnum).objective();
            int oct_b = oracle::min_oct(g, oracle::Engine::BranchAndBound).objective();
            rec.check(oct_a == oct_b, g,
                      "oct engines " + std::to_string(oct_a) + " vs " + std::to_string(oct_b));
            int vc = oracle::min_vertex_cover(g).objective();
            int mis = oracle::max_independent_set(g).objective();
            rec.check(vc + mis == n, g, "vc+mis != n");
            int boosted =
                oracle::mis_p1_boost(g, [](const Graph& h) { return oracle::max_independent_set(h); })
                    .objective();
            rec.check(boosted == mis, g,
                      "boost " + std::to_string(boosted) + " vs mis " + std::to_string(mis));
        });
    }
    return res;
}

SuiteResult suite_reduction_exhaustive(const SuiteParams& p) {
    SuiteResult res{"reduction-exhaustive"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 4;
    for (int n = 1; n <= nmax; ++n) {
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            reduction::VcInstance inst{g, 0};
            auto red = reduction::build_reduction(inst);
            const Graph& gs = red.gstar;
            int m = g.edge_count();
            rec.check(gs.vertex_count() == 5 * n + m, g, "G* size != 5n+m");

            // role partition and local structure
            bool roles_ok = true;
            int counts[6] = {0, 0, 0, 0, 0, 0};
            for (auto& r : red.roles) ++counts[int(r.role)];
            for (int t = 0; t < 5; ++t) roles_ok = roles_ok && counts[t] == n;
            roles_ok = roles_ok && counts[5] == m;
            rec.check(roles_ok, g, "role partition sizes");

            Bitset acd(gs.vertex_count());
            for (int v = 0; v < gs.vertex_count(); ++v) {
                auto role = red.roles[v].role;
                if (role == reduction::Role::A || role == reduction::Role::C ||
                    role == reduction::Role::D)
                    acd.set(v);
            }
            bool acd_ok = subset_is_independent(gs, acd);
            acd.for_each([&](int v) {
                if (gs.degree(v) != 2) acd_ok = false;
                else if (!gs.has_edge(gs.neighbors(v)[0], gs.neighbors(v)[1])) acd_ok = false;
            });
            rec.check(acd_ok, g, "A u C u D degree-2 adjacent-neighbor structure");

            bool complete_ok = true;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (!gs.has_edge(red.y(j), red.x(i)) || !gs.has_edge(red.y(j), red.b(i)))
                        complete_ok = false;
            rec.check(complete_ok, g, "Y complete to X u B");

            rec.check(reduction::certify_class(red), g, "G* not (P2+P5,P6)-free");

            int min_vc = oracle::min_vertex_cover(g).objective();
            int min_oct = oracle::min_oct(gs, oracle::Engine::BranchAndBound).objective();
            rec.check(min_oct == n + min_vc, g,
                      "minOCT(G*)=" + std::to_string(min_oct) + " != n+minVC=" +
                          std::to_string(n + min_vc));
            for (int k = 0; k <= n; ++k)
                rec.check((min_vc <= k) == (min_oct <= n + k), g,
                          "equivalence fails at k=" + std::to_string(k));

            // witness directions; the empty cover of an edgeless graph gives
            // a plain (disconnected) transversal, so the connected witness is
            // taken from a singleton cover there
            auto vc = oracle::min_vertex_cover(g);
            VertexSet cover = vc.vertices;
            if (cover.empty() && n >= 2) {
                VertexSet plain = reduction::vc_to_coct(red, cover);
                auto pv = validate_solution(gs, SolutionTag::OddCycleTransversal, plain, {});
                rec.check(pv.ok && int(plain.size()) == n, g, "empty-cover witness not an OCT");
                cover = {0};
            }
            VertexSet witness = reduction::vc_to_coct(red, cover);
            auto val = validate_solution(gs, SolutionTag::ConnectedOddCycleTransversalExt,
                                         witness, {});
            rec.check(val.ok && int(witness.size()) == n + int(cover.size()), g,
                      "vc_to_coct witness invalid");
            auto oct_sol = oracle::min_oct(gs, oracle::Engine::BranchAndBound);
            VertexSet q = reduction::coct_to_vc(red, oct_sol.vertices);
            rec.check(int(q.size()) <= oct_sol.objective() - n, g, "coct_to_vc size bound");
        });
    }
    return res;
}

SuiteResult suite_reduction_random_class(const SuiteParams& p) {
    SuiteResult res{"reduction-random-class"};
    Recorder rec{res};
    int count = p.count > 0 ? p.count : 50;
    int n = p.n > 0 ? p.n : 8;
    SplitMix64 rng(p.seed);
    for (int i = 0; i < count; ++i) {
        double density = 0.2 + 0.1 * double(rng.below(7));
        SplitMix64 sub(rng.next());
        Graph g = genio::random_graph(n, density, sub);
        auto red = reduction::build_reduction({g, 0});
        rec.check(reduction::certify_class(red), g, "random G*: class certificate failed");
        rec.check(red.gstar.vertex_count() == 5 * n + g.edge_count(), g, "random G*: size");
    }
    return res;
}

void pipeline_check(Recorder& rec, const Graph& g, int s, int wsamples, SplitMix64& rng) {
    std::vector<VertexSet> ws{{}};
    for (int i = 0; i < wsamples; ++i) ws.push_back(random_nonempty_subset(g, rng));
    for (const auto& w : ws) {
        auto a = oracle::cvc_extension_pipeline(g, w, s, SubroutineProvider::oracle_backed());
        auto b = oracle::min_extension(SolutionTag::VertexCover, g, w, true);
        bool ok = a.has_value() == b.has_value() && (!a || a->objective() == b->objective());
        rec.check(ok, g, describe("pipeline s=" + std::to_string(s), w));
    }
}

SuiteResult suite_pipeline_exhaustive(const SuiteParams& p) {
    SuiteResult res{"pipeline-exhaustive"};
    Recorder rec{res};
    int nmax = p.n > 0 ? p.n : 7;
    int wsamples = p.w_samples >= 0 ? p.w_samples : 2;
    SplitMix64 rng(p.seed);
    auto p5 = pattern::LinearForestPattern({5});
    for (int n = 1; n <= nmax; ++n)
        genio::enumerate_all_graphs(n, [&](const Graph& g) {
            if (!graph_connected(g)) return;
            if (!pattern::is_hfree(g, p5)) return;
            pipeline_check(rec, g, 0, wsamples, rng);
        });
    return res;
}

SuiteResult suite_pipeline_random(const SuiteParams& p) {
    SuiteResult res{"pipeline-random"};
    Recorder rec{res};
    int count = p.count > 0 ? p.count : 200;
    int nmax = p.n > 0 ? p.n : 12;
    int s = p.s >= 0 ? p.s : 1;
    int wsamples = p.w_samples >= 0 ? p.w_samples : 2;
    SplitMix64 rng(p.seed);
    for (int i = 0; i < count; ++i) {
        int n = 6 + int(rng.below(uint64_t(nmax - 5)));
        double density = 0.35 + 0.1 * double(rng.below(6));
        Graph g = random_connected_in_class(genio::GraphClass::Sp1P5Free, s, n, density, rng);
        pipeline_check(rec, g, s, wsamples, rng);
    }
    return res;
}

SuiteResult suite_determinism(const SuiteParams& p) {
    SuiteResult res{"determinism"};
    Recorder rec{res};
    SplitMix64 rng(p.seed);

    std::vector<std::pair<std::string, Graph>> instances;
    {
        SplitMix64 r1(7);
        instances.push_back({"cograph-12", genio::random_cograph(12, r1)});
        genio::GeneratorSpec spec;
        spec.cls = genio::GraphClass::Sp1P3Free;
        spec.s = 1;
        spec.n = 9;
        spec.density = 0.5;
        spec.seed = 11;
        instances.push_back({"sp1p3-9", genio::random_in_class(spec)});
        auto red = reduction::build_reduction({make_complete(3), 1});
        instances.push_back({"gstar-k3", red.gstar});
        instances.push_back({"petersen", make_petersen()});
    }
    std::vector<std::string> problems{"vc", "cvc", "fvs", "cfvs", "oct", "coct"};
    std::vector<std::string> engines{"auto", "oracle"};
    for (auto& [name, g] : instances)
        for (auto& prob : problems)
            for (auto& eng : engines) {
                run::SolveRequest req;
                req.g = g;
                req.instance_name = name;
                req.problem = prob;
                req.engine = eng;
                req.seed = rng.next() % 1000;
                if (rng.below(2) && g.vertex_count() > 0) req.w = {0};
                auto a = run::run_solve(req);
                auto b = run::run_solve(req);
                a.report.erase("wall_time_ms");
                b.report.erase("wall_time_ms");
                bool ok = a.report.dump() == b.report.dump() && a.exit_code == b.exit_code;
                rec.check(ok, g, "determinism " + name + " " + prob + " " + eng);
            }
    return res;
}

}  // namespace

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n <= 0) return;
    if (n == 1) {
        fn(Graph(1));
        return;
    }
    if (n == 2) {
        fn(make_path(2));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    std::vector<int> degree(n);
    std::vector<std::pair<int, int>> edges;
    while (true) {
        // decode
        std::fill(degree.begin(), degree.end(), 1);
        for (int x : seq) ++degree[x];
        edges.clear();
        Bitset leaf_ready(n);
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaf_ready.set(v);
        Bitset used(n);
        for (int i = 0; i < n - 2; ++i) {
            int leaf = leaf_ready.first();
            leaf_ready.reset(leaf);
            used.set(leaf);
            int t = seq[i];
            edges.push_back({std::min(leaf, t), std::max(leaf, t)});
            if (--degree[t] == 1 && !used.test(t)) leaf_ready.set(t);
        }
        int u = leaf_ready.first();
        int v = leaf_ready.next(u);
        edges.push_back({u, v});
        fn(Graph::from_edges(n, edges));
        // odometer
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

namespace {

std::string ahu_rooted(const Graph& t, int root, int parent) {
    std::vector<std::string> kids;
    for (int c : t.neighbors(root))
        if (c != parent) kids.push_back(ahu_rooted(t, c, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    Bitset removed(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed.set(v);
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed.test(u) && --deg[u] == 1) next.push_back(u);
        }
        layer = next;
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed.test(v)) centers.push_back(v);
    return centers;
}

std::string tree_canon(const Graph& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string s = ahu_rooted(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_trees(int n) {
    if (n <= 0) return {};
    std::vector<Graph> cur{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : cur) {
            for (int attach = 0; attach < t.vertex_count(); ++attach) {
                std::vector<std::pair<int, int>> edges;
                for (int u = 0; u < t.vertex_count(); ++u)
                    for (int v : t.neighbors(u))
                        if (u < v) edges.push_back({u, v});
                edges.push_back({attach, t.vertex_count()});
                Graph bigger = Graph::from_edges(t.vertex_count() + 1, edges);
                next.emplace(tree_canon(bigger), bigger);
            }
        }
        cur.clear();
        for (auto& [k, v] : next) cur.push_back(v);
    }
    return cur;
}

std::vector<std::string> suite_names() {
    return {"p4free-exhaustive", "sp1p3-exhaustive", "sp1p3-random",
            "lemma-split",       "lemma-components", "lemma-tree",
            "lemma-connector",   "lemma-contract",   "oracle-consistency",
            "reduction-exhaustive", "reduction-random-class",
            "pipeline-exhaustive", "pipeline-random", "determinism"};
}

SuiteResult run_suite(const std::string& name, const SuiteParams& p) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    if (name == "p4free-exhaustive") res = suite_p4free_exhaustive(p);
    else if (name == "sp1p3-exhaustive") res = suite_sp1p3_exhaustive(p);
    else if (name == "sp1p3-random") res = suite_sp1p3_random(p);
    else if (name == "lemma-split") res = suite_lemma_split(p);
    else if (name == "lemma-components") res = suite_lemma_components(p);
    else if (name == "lemma-tree") res = suite_lemma_tree(p);
    else if (name == "lemma-connector") res = suite_lemma_connector(p);
    else if (name == "lemma-contract") res = suite_lemma_contract(p);
    else if (name == "oracle-consistency") res = suite_oracle_consistency(p);
    else if (name == "reduction-exhaustive") res = suite_reduction_exhaustive(p);
    else if (name == "reduction-random-class") res = suite_reduction_random_class(p);
    else if (name == "pipeline-exhaustive") res = suite_pipeline_exhaustive(p);
    else if (name == "pipeline-random") res = suite_pipeline_random(p);
    else if (name == "determinism") res = suite_determinism(p);
    else throw std::invalid_argument("unknown suite: " + name);
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace tvlab::verify
