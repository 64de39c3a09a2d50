#include "tvlab/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tvlab/pattern.hpp"

namespace tvlab::reduction {

OctInstance build_reduction(const VcInstance& inst) {
    int n = inst.g.vertex_count();
    std::vector<std::pair<int, int>> src_edges;
    for (int u = 0; u < n; ++u)
        for (int v : inst.g.neighbors(u))
            if (u < v) src_edges.push_back({u, v});
    std::sort(src_edges.begin(), src_edges.end());
    int m = int(src_edges.size());

    OctInstance out;
    out.origin = inst;
    out.budget = n + inst.k;
    out.roles.resize(5 * n + m);
    auto A = [&](int i) { return i - 1; };
    auto B = [&](int i) { return n + i - 1; };
    auto C = [&](int i) { return 2 * n + i - 1; };
    auto X = [&](int i) { return 3 * n + i - 1; };
    auto Y = [&](int i) { return 4 * n + i - 1; };
    for (int i = 1; i <= n; ++i) {
        out.roles[A(i)] = {Role::A, i, -1};
        out.roles[B(i)] = {Role::B, i, -1};
        out.roles[C(i)] = {Role::C, i, -1};
        out.roles[X(i)] = {Role::X, i, -1};
        out.roles[Y(i)] = {Role::Y, i, -1};
    }

    std::vector<std::pair<int, int>> e;
    // Y complete to X and to B
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            e.push_back({X(i), Y(j)});
            e.push_back({B(i), Y(j)});
        }
    // vertex gadgets
    for (int i = 1; i <= n; ++i) {
        e.push_back({X(i), A(i)});
        e.push_back({X(i), B(i)});
        e.push_back({A(i), B(i)});
        e.push_back({B(i), C(i)});
        e.push_back({C(i), Y(i)});
    }
    // edge gadgets, lexicographic source-edge order
    for (int t = 0; t < m; ++t) {
        int d = 5 * n + t;
        int i = src_edges[t].first + 1, j = src_edges[t].second + 1;
        out.roles[d] = {Role::D, i, j};
        e.push_back({X(i), d});
        e.push_back({Y(j), d});
    }
    out.gstar = Graph::from_edges(5 * n + m, e);
    return out;
}

VertexSet vc_to_coct(const OctInstance& inst, const VertexSet& q) {
    const Graph& g = inst.origin.g;
    int n = g.vertex_count();
    Bitset qb = Bitset::of(n, q);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && !qb.test(u) && !qb.test(v))
                throw std::invalid_argument("vc_to_coct: q is not a vertex cover");
    VertexSet s;
    for (int i = 1; i <= n; ++i) {
        if (qb.test(i - 1)) {
            s.push_back(inst.x(i));
            s.push_back(inst.y(i));
        } else {
            s.push_back(inst.b(i));
        }
    }
    std::sort(s.begin(), s.end());
    return s;
}

VertexSet coct_to_vc(const OctInstance& inst, const VertexSet& s) {
    const Graph& gs = inst.gstar;
    int n = inst.origin.g.vertex_count();
    auto v = validate_solution(gs, SolutionTag::OddCycleTransversal, s, {});
    if (!v.ok) throw std::invalid_argument("coct_to_vc: s is not an odd cycle transversal");

    Bitset sb = Bitset::of(gs.vertex_count(), s);
    // swap every edge-gadget vertex for its x_i
    for (int t = 5 * n; t < gs.vertex_count(); ++t)
        if (sb.test(t)) {
            sb.reset(t);
            sb.set(inst.x(inst.roles[t].i));
        }
    // normalize each vertex gadget to {b_i} or {x_i, y_i}
    for (int i = 1; i <= n; ++i) {
        int in_gadget = int(sb.test(inst.a(i))) + int(sb.test(inst.b(i))) +
                        int(sb.test(inst.c(i))) + int(sb.test(inst.x(i))) +
                        int(sb.test(inst.y(i)));
        if (in_gadget >= 2) {
            sb.reset(inst.a(i));
            sb.reset(inst.b(i));
            sb.reset(inst.c(i));
            sb.set(inst.x(i));
            sb.set(inst.y(i));
        }
    }
    VertexSet q;
    for (int i = 1; i <= n; ++i)
        if (sb.test(inst.x(i))) q.push_back(i - 1);
    // sanity: the normalized set must still be a transversal and q a cover
    auto v2 = validate_solution(gs, SolutionTag::OddCycleTransversal, sb.to_vector(), {});
    if (!v2.ok) throw std::logic_error("coct_to_vc: normalization broke the transversal");
    Bitset qb = Bitset::of(n, q);
    for (int u = 0; u < n; ++u)
        for (int w : inst.origin.g.neighbors(u))
            if (u < w && !qb.test(u) && !qb.test(w))
                throw std::logic_error("coct_to_vc: extracted set is not a vertex cover");
    return q;
}

bool certify_class(const OctInstance& inst) {
    return pattern::is_hfree(inst.gstar, pattern::LinearForestPattern({6})) &&
           pattern::is_hfree(inst.gstar, pattern::LinearForestPattern({5, 2}));
}

EquivalenceReport equivalence_check(const OctInstance& inst, int size_limit) {
    if (inst.gstar.vertex_count() > size_limit)
        throw std::invalid_argument("equivalence_check: instance exceeds the size limit");
    EquivalenceReport rep;
    rep.n = inst.origin.g.vertex_count();
    rep.m = inst.origin.g.edge_count();
    auto vc = oracle::min_vertex_cover(inst.origin.g);
    rep.min_vc = vc.objective();
    auto oct = oracle::min_oct(inst.gstar, oracle::Engine::BranchAndBound);
    rep.min_oct_gstar = oct.objective();
    rep.identity_holds = rep.min_oct_gstar == rep.n + rep.min_vc;

    VertexSet cover = vc.vertices;
    rep.degenerate_cover = cover.empty() && rep.n >= 2;
    if (rep.degenerate_cover) cover = {0};  // everything covers an edgeless graph
    VertexSet witness = vc_to_coct(inst, cover);
    auto wv = validate_solution(inst.gstar, SolutionTag::ConnectedOddCycleTransversalExt,
                                witness, {});
    rep.witness_valid = wv.ok && int(witness.size()) == rep.n + int(cover.size());
    // sandwich: min_oct <= min_coct <= |witness|; closes exactly when the
    // witness comes from an optimal cover
    rep.min_coct_gstar = rep.degenerate_cover ? rep.n + 1 : rep.min_oct_gstar;
    rep.sandwich_holds = rep.witness_valid && rep.identity_holds && !rep.degenerate_cover;
    return rep;
}

std::string serialize_roles(const OctInstance& inst) {
    std::ostringstream out;
    static const char* names = "ABCXYD";
    for (int v = 0; v < inst.gstar.vertex_count(); ++v) {
        const auto& r = inst.roles[v];
        out << v << " " << names[int(r.role)] << " " << r.i;
        if (r.role == Role::D) out << "," << r.j;
        out << "\n";
    }
    return out.str();
}

}  // namespace tvlab::reduction
