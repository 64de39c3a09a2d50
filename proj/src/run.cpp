#include "tvlab/run.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "tvlab/cograph.hpp"
#include "tvlab/genio.hpp"
#include "tvlab/oracle.hpp"
#include "tvlab/pattern.hpp"
#include "tvlab/sp1p3.hpp"

namespace tvlab::run {

std::string instance_digest(const Graph& g) {
    std::string text = genio::serialize_edgelist(g);
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

Graph parse_graph_text(const std::string& text) {
    // edge lists start with a digit header line; graph6 bytes start at '?'
    size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i < text.size() && (isdigit((unsigned char)text[i])))
        return genio::parse_edgelist(text);
    return genio::parse_graph6(text.substr(i));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw genio::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

namespace {

using oracle::SubroutineProvider;
using oracle::TransversalSolution;

struct ClassInfo {
    std::string certified = "none";  // p4free | sp1p3:<s> | none
    int s = -1;                      // for sp1p3
    VertexSet certificate;           // forbidden pattern found on explicit class miss
};

constexpr int kAutoClassMaxS = 3;

ClassInfo resolve_class(const Graph& g, const std::string& requested) {
    ClassInfo info;
    if (requested == "p4free" || requested == "auto") {
        auto chk = pattern::is_cograph(g);
        if (chk.is_cograph) {
            info.certified = "p4free";
            return info;
        }
        if (requested == "p4free") {
            info.certificate = chk.p4;
            return info;
        }
    }
    if (requested.rfind("sp1p3:", 0) == 0 || requested == "auto") {
        int lo = 0, hi = kAutoClassMaxS;
        if (requested != "auto") lo = hi = std::stoi(requested.substr(6));
        for (int s = lo; s <= hi; ++s) {
            std::vector<int> p(s, 1);
            p.push_back(3);
            auto copy = pattern::find_induced(g, pattern::LinearForestPattern(p));
            if (!copy) {
                info.certified = "sp1p3:" + std::to_string(s);
                info.s = s;
                return info;
            }
            if (requested != "auto") info.certificate = copy->all_vertices();
        }
    }
    return info;
}

SolutionTag tag_for(const std::string& problem) {
    if (problem == "vc") return SolutionTag::VertexCover;
    if (problem == "cvc") return SolutionTag::ConnectedVertexCoverExt;
    if (problem == "fvs") return SolutionTag::FeedbackVertexSet;
    if (problem == "cfvs") return SolutionTag::ConnectedFeedbackVertexSetExt;
    if (problem == "oct") return SolutionTag::OddCycleTransversal;
    if (problem == "coct") return SolutionTag::ConnectedOddCycleTransversalExt;
    throw std::invalid_argument("unknown problem: " + problem);
}

SolutionTag base_of(SolutionTag t) {
    switch (t) {
        case SolutionTag::ConnectedVertexCoverExt: return SolutionTag::VertexCover;
        case SolutionTag::ConnectedFeedbackVertexSetExt: return SolutionTag::FeedbackVertexSet;
        case SolutionTag::ConnectedOddCycleTransversalExt:
            return SolutionTag::OddCycleTransversal;
        default: return t;
    }
}

// MIS on an (sP1+P3)-free graph by peeling one P1 level at a time down to the
// cotree base case.
TransversalSolution mis_sp1p3(const Graph& g, int s) {
    if (s == 0) return cograph::max_independent_set(g);
    return oracle::mis_p1_boost(
        g, [&](const Graph& sub) { return mis_sp1p3(sub, s - 1); });
}

// Connected VC through the pipeline, with the shared component preprocessing.
std::optional<TransversalSolution> cvc_pipeline_prepped(const Graph& g, const VertexSet& w,
                                                        int s) {
    auto prep = oracle::prepare_extension_input(
        g, w, [](const Graph& comp) { return comp.edge_count() == 0; });
    if (prep.infeasible) return std::nullopt;
    if (prep.trivial) return TransversalSolution{SolutionTag::ConnectedVertexCoverExt, {}};
    auto r = oracle::cvc_extension_pipeline(prep.sub, prep.w_sub,
                                            s, SubroutineProvider::oracle_backed());
    if (!r) return std::nullopt;
    VertexSet lifted;
    for (int v : r->vertices) lifted.push_back(prep.to_parent[v]);
    std::sort(lifted.begin(), lifted.end());
    return TransversalSolution{SolutionTag::ConnectedVertexCoverExt, lifted};
}

struct EngineRun {
    std::string algorithm;
    std::optional<TransversalSolution> solution;
};

EngineRun run_oracle(const std::string& problem, const Graph& g, const VertexSet& w) {
    SolutionTag t = tag_for(problem);
    bool connected = tag_is_connected_extension(t);
    return {"oracle", oracle::min_extension(base_of(t), g, w, connected)};
}

// Plain VC specialized: the extension reduces to the plain problem on g - w,
// which stays in class, solved by the class MIS.
TransversalSolution vc_specialized(const Graph& g, const VertexSet& w, const ClassInfo& cls) {
    Bitset keep = g.full_set();
    for (int v : w) keep.reset(v);
    auto sub = induced_subgraph(g, keep);
    auto mis = cls.certified == "p4free" ? cograph::max_independent_set(sub.graph)
                                         : mis_sp1p3(sub.graph, cls.s);
    Bitset cover = Bitset::of(sub.graph.vertex_count(), mis.vertices).complement_set();
    VertexSet s = w;
    cover.for_each([&](int v) { s.push_back(sub.to_parent[v]); });
    std::sort(s.begin(), s.end());
    return {SolutionTag::VertexCover, s};
}

// Plain problems with a nonempty extension set reduce to the plain problem
// on g - w (which stays in class) with w added back.
TransversalSolution plain_with_w(const Graph& g, const VertexSet& w,
                                 const std::function<TransversalSolution(const Graph&)>& solve) {
    Bitset keep = g.full_set();
    for (int v : w) keep.reset(v);
    auto sub = induced_subgraph(g, keep);
    TransversalSolution inner = solve(sub.graph);
    VertexSet s = w;
    for (int v : inner.vertices) s.push_back(sub.to_parent[v]);
    std::sort(s.begin(), s.end());
    return {inner.tag, s};
}

EngineRun run_specialized(const std::string& problem, const Graph& g, const VertexSet& w,
                          const ClassInfo& cls) {
    const auto& sub = SubroutineProvider::oracle_backed();
    if (cls.certified == "p4free") {
        if (problem == "vc") return {"cograph-mis", vc_specialized(g, w, cls)};
        if (problem == "fvs")
            return {"cograph-dp", plain_with_w(g, w, [](const Graph& h) {
                        return cograph::min_fvs(h);
                    })};
        if (problem == "oct")
            return {"cograph-dp", plain_with_w(g, w, [](const Graph& h) {
                        return cograph::min_oct(h);
                    })};
        if (problem == "cfvs") return {"cograph-steps", cograph::min_cfvs_extension(g, w, sub)};
        if (problem == "coct") return {"cograph-steps", cograph::min_coct_extension(g, w, sub)};
        if (problem == "cvc") return {"cvc-pipeline", cvc_pipeline_prepped(g, w, 0)};
    }
    int s = cls.s;
    if (problem == "vc") return {"sp1p3-mis-boost", vc_specialized(g, w, cls)};
    if (problem == "cvc") return {"cvc-pipeline", cvc_pipeline_prepped(g, w, s)};
    if (problem == "fvs")
        return {"sp1p3-steps", plain_with_w(g, w, [&](const Graph& h) {
                    return sp1p3::min_fvs(h, s, sub);
                })};
    if (problem == "oct")
        return {"sp1p3-steps", plain_with_w(g, w, [&](const Graph& h) {
                    return sp1p3::min_oct(h, s, sub);
                })};
    if (problem == "cfvs") return {"sp1p3-steps", sp1p3::min_cfvs_extension(g, w, s, sub)};
    if (problem == "coct") return {"sp1p3-steps", sp1p3::min_coct_extension(g, w, s, sub)};
    throw std::invalid_argument("unknown problem: " + problem);
}

}  // namespace

SolveOutcome run_solve(const SolveRequest& req) {
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    Json& rep = out.report;
    rep["schema"] = "transversal-lab/1";
    rep["command"] = "solve";
    rep["problem"] = req.problem;
    rep["engine"] = req.engine;
    rep["class_requested"] = req.klass;

    try {
        tag_for(req.problem);  // validates the problem name
        for (int v : req.w)
            if (v < 0 || v >= req.g.vertex_count())
                throw std::invalid_argument("extension set vertex out of range");
        VertexSet w = req.w;
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());

        ClassInfo cls = resolve_class(req.g, req.klass);
        rep["class_certified"] = cls.certified;
        rep["instance"] = {{"name", req.instance_name},
                           {"digest", instance_digest(req.g)},
                           {"n", req.g.vertex_count()},
                           {"m", req.g.edge_count()}};
        rep["w"] = w;
        rep["seed"] = req.seed;

        bool want_specialized = req.engine == "specialized" || req.engine == "both" ||
                                (req.engine == "auto" && cls.certified != "none");
        if (want_specialized && cls.certified == "none") {
            rep["error"] = "instance is outside the requested class";
            rep["certificate"] = cls.certificate;
            out.exit_code = 3;
            return out;
        }

        EngineRun primary;
        if (req.engine == "oracle" || (req.engine == "auto" && cls.certified == "none"))
            primary = run_oracle(req.problem, req.g, w);
        else
            primary = run_specialized(req.problem, req.g, w, cls);

        if (req.engine == "both") {
            EngineRun check = run_oracle(req.problem, req.g, w);
            bool agree = primary.solution.has_value() == check.solution.has_value() &&
                         (!primary.solution || primary.solution->objective() ==
                                                   check.solution->objective());
            rep["oracle_objective"] =
                check.solution ? Json(check.solution->objective()) : Json(nullptr);
            if (!agree) {
                rep["error"] = "engine objectives disagree";
                rep["algorithm"] = primary.algorithm + "+oracle";
                out.exit_code = 1;
                return out;
            }
            primary.algorithm += "+oracle";
        }
        rep["algorithm"] = primary.algorithm;

        if (!primary.solution) {
            rep["solution"] = {{"feasible", false}, {"objective", nullptr}, {"vertices", Json::array()}};
            out.exit_code = 2;
        } else {
            auto v = validate_solution(req.g, primary.solution->tag, primary.solution->vertices, w);
            if (!v.ok) throw std::logic_error("emitted solution failed validation: " + v.reason);
            rep["solution"] = {{"feasible", true},
                               {"objective", primary.solution->objective()},
                               {"vertices", primary.solution->vertices}};
            out.exit_code = 0;
        }
    } catch (const genio::ParseError& e) {
        rep["error"] = e.what();
        out.exit_code = 4;
    } catch (const std::invalid_argument& e) {
        rep["error"] = e.what();
        out.exit_code = 4;
    } catch (const oracle::OutOfClassError& e) {
        rep["error"] = e.what();
        out.exit_code = 3;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    rep["wall_time_ms"] = ms;
    return out;
}

}  // namespace tvlab::run
