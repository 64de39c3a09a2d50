#include "tvlab/cograph.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvlab/pattern.hpp"

namespace tvlab::cograph {

namespace {

// Components of the complement restricted to `mask`, without materializing
// the complement: BFS over the shrinking "not yet reached" set.
std::vector<Bitset> complement_components(const Graph& g, const Bitset& mask) {
    std::vector<Bitset> comps;
    Bitset todo = mask;
    while (todo.any()) {
        int s = todo.first();
        Bitset comp(g.vertex_count());
        comp.set(s);
        todo.reset(s);
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            Bitset reach = todo.andnot(g.neighbor_bits(u));  // complement neighbors
            reach.for_each([&](int v) {
                comp.set(v);
                todo.reset(v);
                queue.push_back(v);
            });
        }
        comps.push_back(comp);
    }
    return comps;
}

std::vector<Bitset> masked_components(const Graph& g, const Bitset& mask) {
    std::vector<Bitset> comps;
    Bitset todo = mask;
    while (todo.any()) {
        Bitset comp = subset_component_of(g, todo, todo.first());
        todo.andnot_assign(comp);
        comps.push_back(comp);
    }
    return comps;
}

int build_rec(const Graph& g, const Bitset& mask, Cotree& t, bool& failed, std::vector<int>& p4) {
    if (failed) return -1;
    if (mask.count() == 1) {
        t.nodes.push_back({Cotree::Kind::Leaf, mask.first(), {}});
        return int(t.nodes.size()) - 1;
    }
    auto comps = masked_components(g, mask);
    if (comps.size() >= 2) {
        std::vector<int> kids;
        for (auto& c : comps) kids.push_back(build_rec(g, c, t, failed, p4));
        if (failed) return -1;
        t.nodes.push_back({Cotree::Kind::Union, -1, kids});
        return int(t.nodes.size()) - 1;
    }
    auto cocomps = complement_components(g, mask);
    if (cocomps.size() >= 2) {
        std::vector<int> kids;
        for (auto& c : cocomps) kids.push_back(build_rec(g, c, t, failed, p4));
        if (failed) return -1;
        t.nodes.push_back({Cotree::Kind::Join, -1, kids});
        return int(t.nodes.size()) - 1;
    }
    // connected and co-connected on >= 2 vertices: not a cograph
    auto sub = induced_subgraph(g, mask);
    auto copy = pattern::find_induced(sub.graph, pattern::LinearForestPattern({4}));
    failed = true;
    if (copy)
        for (int v : copy->assignment[0]) p4.push_back(sub.to_parent[v]);
    return -1;
}

}  // namespace

CotreeResult build_cotree(const Graph& g) {
    CotreeResult out;
    if (g.vertex_count() == 0) {
        out.is_cograph = true;
        return out;
    }
    bool failed = false;
    out.tree.root = build_rec(g, g.full_set(), out.tree, failed, out.p4);
    out.is_cograph = !failed;
    if (failed) out.tree = Cotree{};
    return out;
}

namespace {

void collect_leaves(const Cotree& t, int node, VertexSet& out) {
    const auto& nd = t.nodes[node];
    if (nd.kind == Cotree::Kind::Leaf) {
        out.push_back(nd.vertex);
        return;
    }
    for (int c : nd.children) collect_leaves(t, c, out);
}

}  // namespace

Graph evaluate_cotree(const Cotree& t) {
    if (t.root < 0) return Graph(0);
    VertexSet all;
    collect_leaves(t, t.root, all);
    int n = int(all.size());
    std::vector<std::pair<int, int>> edges;
    for (int id = 0; id < int(t.nodes.size()); ++id) {
        const auto& nd = t.nodes[id];
        if (nd.kind != Cotree::Kind::Join) continue;
        std::vector<VertexSet> kid_leaves(nd.children.size());
        for (size_t c = 0; c < nd.children.size(); ++c)
            collect_leaves(t, nd.children[c], kid_leaves[c]);
        for (size_t a = 0; a + 1 < nd.children.size(); ++a)
            for (size_t b = a + 1; b < nd.children.size(); ++b)
                for (int u : kid_leaves[a])
                    for (int v : kid_leaves[b]) edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edges(n, edges);
}

BipartiteSplit spanning_split(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("spanning_split: need >= 2 vertices");
    if (!subset_is_connected(g, g.full_set()))
        throw std::invalid_argument("spanning_split: graph not connected");
    auto chk = pattern::is_cograph(g);
    if (!chk.is_cograph) throw std::invalid_argument("spanning_split: graph has an induced P4");
    auto cocomps = complement_components(g, g.full_set());
    // connected P4-free on >= 2 vertices is a join, so >= 2 co-components
    BipartiteSplit split;
    split.x = cocomps[0].to_vector();
    Bitset rest = g.full_set();
    rest.andnot_assign(cocomps[0]);
    split.y = rest.to_vector();
    return split;
}

// ------------------------------------------------- cotree dynamic programs

namespace {

struct DpEntry {
    VertexSet mis, forest, bip;
    int min_leaf = -1;
};

bool better_max(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

VertexSet merged(const VertexSet& a, const VertexSet& b) { return set_union(a, b); }

DpEntry dp(const Cotree& t, int node, std::vector<DpEntry>& memo, std::vector<char>& done) {
    if (done[node]) return memo[node];
    const auto& nd = t.nodes[node];
    DpEntry e;
    if (nd.kind == Cotree::Kind::Leaf) {
        e.mis = e.forest = e.bip = {nd.vertex};
        e.min_leaf = nd.vertex;
    } else {
        std::vector<DpEntry> kids;
        for (int c : nd.children) kids.push_back(dp(t, c, memo, done));
        e.min_leaf = kids[0].min_leaf;
        for (auto& k : kids) e.min_leaf = std::min(e.min_leaf, k.min_leaf);
        if (nd.kind == Cotree::Kind::Union) {
            for (auto& k : kids) {
                e.mis = merged(e.mis, k.mis);
                e.forest = merged(e.forest, k.forest);
                e.bip = merged(e.bip, k.bip);
            }
        } else {
            // join node
            // smallest leaf outside child j, for the forest "star" candidate
            int m1 = -1, m2 = -1;  // two smallest child min_leaf values
            for (auto& k : kids) {
                if (m1 == -1 || k.min_leaf < m1) {
                    m2 = m1;
                    m1 = k.min_leaf;
                } else if (m2 == -1 || k.min_leaf < m2) {
                    m2 = k.min_leaf;
                }
            }
            for (size_t j = 0; j < kids.size(); ++j) {
                if (e.mis.empty() || better_max(kids[j].mis, e.mis)) e.mis = kids[j].mis;
                if (e.forest.empty() || better_max(kids[j].forest, e.forest))
                    e.forest = kids[j].forest;
                if (e.bip.empty() || better_max(kids[j].bip, e.bip)) e.bip = kids[j].bip;
            }
            for (size_t j = 0; j < kids.size(); ++j) {
                int partner = (kids[j].min_leaf == m1) ? m2 : m1;
                VertexSet cand = merged(kids[j].mis, {partner});
                if (better_max(cand, e.forest)) e.forest = cand;
            }
            for (size_t a = 0; a + 1 < kids.size(); ++a)
                for (size_t b = a + 1; b < kids.size(); ++b) {
                    VertexSet cand = merged(kids[a].mis, kids[b].mis);
                    if (better_max(cand, e.bip)) e.bip = cand;
                }
        }
    }
    memo[node] = e;
    done[node] = 1;
    return e;
}

DpEntry solve_dp(const Graph& g) {
    auto ct = build_cotree(g);
    if (!ct.is_cograph) throw oracle::OutOfClassError("input graph has an induced P4");
    if (ct.tree.root < 0) return {};
    std::vector<DpEntry> memo(ct.tree.nodes.size());
    std::vector<char> done(ct.tree.nodes.size(), 0);
    return dp(ct.tree, ct.tree.root, memo, done);
}

VertexSet complement_of(const Graph& g, const VertexSet& s) {
    return Bitset::of(g.vertex_count(), s).complement_set().to_vector();
}

}  // namespace

oracle::TransversalSolution max_independent_set(const Graph& g) {
    return {SolutionTag::MaxIndependentSet, solve_dp(g).mis};
}
oracle::TransversalSolution max_induced_forest(const Graph& g) {
    return {SolutionTag::MaxInducedForest, solve_dp(g).forest};
}
oracle::TransversalSolution max_induced_bipartite(const Graph& g) {
    return {SolutionTag::MaxInducedBipartite, solve_dp(g).bip};
}
oracle::TransversalSolution min_fvs(const Graph& g) {
    return {SolutionTag::FeedbackVertexSet, complement_of(g, solve_dp(g).forest)};
}
oracle::TransversalSolution min_oct(const Graph& g) {
    return {SolutionTag::OddCycleTransversal, complement_of(g, solve_dp(g).bip)};
}

// ------------------------------------------------------ extension solvers

namespace {

struct CandidateBag {
    const Graph& g;
    SolutionTag tag;
    const VertexSet& w;
    std::optional<VertexSet> best;

    void offer(const VertexSet& cand, bool must_hold) {
        auto v = validate_solution(g, tag, cand, w);
        if (!v.ok) {
            if (must_hold)
                throw std::logic_error("cograph extension: guaranteed candidate failed: " +
                                       v.reason);
            return;
        }
        if (!best || oracle::better_solution(cand, *best)) best = cand;
    }
};

VertexSet lift(const std::vector<int>& to_parent, const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// Core of both extension algorithms on a connected P4-free graph.
std::optional<VertexSet> extension_core(const Graph& g, const VertexSet& w, bool oct_mode,
                                        const oracle::SubroutineProvider& sub) {
    int n = g.vertex_count();
    SolutionTag tag = oct_mode ? SolutionTag::ConnectedOddCycleTransversalExt
                               : SolutionTag::ConnectedFeedbackVertexSetExt;
    if (n == 0) return VertexSet{};
    if (w.empty()) {
        if (!oct_mode && is_forest(g).forest) return VertexSet{};
        if (oct_mode && is_bipartite(g).bipartite) return VertexSet{};
    }
    if (n == 1) return w;

    CandidateBag bag{g, tag, w, std::nullopt};
    auto split = spanning_split(g);

    // Step 1: solutions meeting both sides, anchored at a dominating edge.
    Bitset wbits = Bitset::of(n, w);
    for (int u : split.x)
        for (int v : split.y) {
            if (wbits.test(u) || wbits.test(v)) {
                // u,v in W is fine; they are in S anyway
            }
            Bitset rest = g.full_set();
            rest.andnot_assign(wbits);
            rest.reset(u);
            rest.reset(v);
            auto subg = induced_subgraph(g, rest);
            VertexSet inner = oct_mode ? min_oct(subg.graph).vertices : min_fvs(subg.graph).vertices;
            VertexSet cand = set_union(w, {std::min(u, v), std::max(u, v)});
            cand = set_union(cand, lift(subg.to_parent, inner));
            bag.offer(cand, true);
        }

    // Step 2: solutions inside one side.
    for (int pass = 0; pass < 2; ++pass) {
        const VertexSet& a = pass == 0 ? split.x : split.y;
        const VertexSet& b = pass == 0 ? split.y : split.x;
        if (!Bitset::of(n, w).is_subset_of(Bitset::of(n, a))) continue;
        Bitset bbits = Bitset::of(n, b);
        if (oct_mode ? !subset_is_bipartite(g, bbits) : !subset_is_forest(g, bbits)) continue;
        bool b_has_edge = subset_edge_count(g, bbits) > 0;
        if (b_has_edge) {
            bag.offer(a, false);  // S = A, valid only if g[A] is connected
            continue;
        }
        // B independent
        if (oct_mode || b.size() == 1) {
            auto subg = induced_subgraph(g, a);
            VertexSet wl;
            for (int x : w) wl.push_back(subg.from_parent[x]);
            std::sort(wl.begin(), wl.end());
            auto r = sub.cvc_ext(subg.graph, wl);
            if (r) bag.offer(lift(subg.to_parent, r->vertices), true);
        } else {
            bag.offer(a, false);
            for (int x : a) {
                if (wbits.test(x)) continue;
                Bitset ax = Bitset::of(n, a);
                ax.reset(x);
                if (subset_is_connected(g, ax)) bag.offer(ax.to_vector(), false);
            }
        }
    }
    return bag.best;
}

std::optional<oracle::TransversalSolution> extension_entry(const Graph& g, const VertexSet& w,
                                                           bool oct_mode,
                                                           const oracle::SubroutineProvider& sub) {
    auto chk = pattern::is_cograph(g);
    if (!chk.is_cograph) throw oracle::OutOfClassError("input graph has an induced P4");
    SolutionTag tag = oct_mode ? SolutionTag::ConnectedOddCycleTransversalExt
                               : SolutionTag::ConnectedFeedbackVertexSetExt;
    auto prep = oracle::prepare_extension_input(g, w, [&](const Graph& comp) {
        return oct_mode ? is_bipartite(comp).bipartite : is_forest(comp).forest;
    });
    if (prep.infeasible) return std::nullopt;
    if (prep.trivial) return oracle::TransversalSolution{tag, {}};
    auto core = extension_core(prep.sub, prep.w_sub, oct_mode, sub);
    if (!core) return std::nullopt;
    return oracle::TransversalSolution{tag, lift(prep.to_parent, *core)};
}

}  // namespace

std::optional<oracle::TransversalSolution> min_cfvs_extension(const Graph& g, const VertexSet& w,
                                                              const oracle::SubroutineProvider& sub) {
    return extension_entry(g, w, false, sub);
}

std::optional<oracle::TransversalSolution> min_coct_extension(const Graph& g, const VertexSet& w,
                                                              const oracle::SubroutineProvider& sub) {
    return extension_entry(g, w, true, sub);
}

}  // namespace tvlab::cograph
