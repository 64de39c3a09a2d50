#include "tvlab/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace tvlab::oracle {

bool better_solution(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void for_each_subset(const VertexSet& pool, int min_k, int max_k,
                     const std::function<bool(const VertexSet&)>& fn) {
    int p = int(pool.size());
    max_k = std::min(max_k, p);
    VertexSet cur;
    for (int k = std::max(0, min_k); k <= max_k; ++k) {
        if (k == 0) {
            if (!fn(cur)) return;
            continue;
        }
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            cur.clear();
            for (int i : idx) cur.push_back(pool[i]);
            if (!fn(cur)) return;
            int i = k - 1;
            while (i >= 0 && idx[i] == p - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------- MIS / VC

namespace {

int pick_branch_vertex(const Graph& g, const Bitset& mask, int& deg_out) {
    int best = -1, bestdeg = -1;
    mask.for_each([&](int v) {
        int d = g.neighbor_bits(v).count_and(mask);
        if (d > bestdeg) {
            bestdeg = d;
            best = v;
        }
    });
    deg_out = bestdeg;
    return best;
}

void mis_rec(const Graph& g, Bitset mask, Bitset cur, int cur_count, Bitset& best,
             int& best_count) {
    // peel isolated vertices straight into the solution
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = mask.first(); v != -1; v = mask.next(v)) {
            if (g.neighbor_bits(v).count_and(mask) == 0) {
                mask.reset(v);
                cur.set(v);
                ++cur_count;
                changed = true;
            }
        }
    }
    int rem = mask.count();
    if (cur_count + rem <= best_count) return;
    if (rem == 0) {
        best = cur;
        best_count = cur_count;
        return;
    }
    int deg;
    int v = pick_branch_vertex(g, mask, deg);
    // take v
    {
        Bitset m2 = mask;
        m2.andnot_assign(g.neighbor_bits(v));
        m2.reset(v);
        Bitset c2 = cur;
        c2.set(v);
        mis_rec(g, m2, c2, cur_count + 1, best, best_count);
    }
    // leave v
    {
        Bitset m2 = mask;
        m2.reset(v);
        mis_rec(g, m2, cur, cur_count, best, best_count);
    }
}

bool mis_at_least_rec(const Graph& g, Bitset mask, int need) {
    if (need <= 0) return true;
    // isolated vertices are free
    for (int v = mask.first(); v != -1; v = mask.next(v)) {
        if (g.neighbor_bits(v).count_and(mask) == 0) {
            mask.reset(v);
            if (--need <= 0) return true;
        }
    }
    if (mask.count() < need) return false;
    int deg;
    int v = pick_branch_vertex(g, mask, deg);
    Bitset m2 = mask;
    m2.andnot_assign(g.neighbor_bits(v));
    m2.reset(v);
    if (mis_at_least_rec(g, m2, need - 1)) return true;
    mask.reset(v);
    return mis_at_least_rec(g, mask, need);
}

}  // namespace

Bitset max_independent_set_masked(const Graph& g, const Bitset& mask) {
    Bitset best(g.vertex_count());
    int best_count = -1;
    mis_rec(g, mask, Bitset(g.vertex_count()), 0, best, best_count);
    return best;
}

bool mis_at_least(const Graph& g, const Bitset& mask, int need) {
    return mis_at_least_rec(g, mask, need);
}

TransversalSolution max_independent_set(const Graph& g) {
    return {SolutionTag::MaxIndependentSet, max_independent_set_masked(g, g.full_set()).to_vector()};
}

TransversalSolution min_vertex_cover(const Graph& g) {
    Bitset mis = max_independent_set_masked(g, g.full_set());
    return {SolutionTag::VertexCover, mis.complement_set().to_vector()};
}

TransversalSolution mis_p1_boost(const Graph& g,
                                 const std::function<TransversalSolution(const Graph&)>& inner) {
    TransversalSolution best{SolutionTag::MaxIndependentSet, {}};
    bool have = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Bitset keep = g.full_set();
        keep.andnot_assign(g.neighbor_bits(v));
        keep.reset(v);
        auto sub = induced_subgraph(g, keep);
        TransversalSolution in = inner(sub.graph);
        VertexSet cand{v};
        for (int u : in.vertices) cand.push_back(sub.to_parent[u]);
        std::sort(cand.begin(), cand.end());
        if (!have || cand.size() > best.vertices.size() ||
            (cand.size() == best.vertices.size() && cand < best.vertices)) {
            best.vertices = cand;
            have = true;
        }
    }
    return best;  // the empty-selection case is the n = 0 graph
}

// ------------------------------------------------------- cycle machinery

namespace {

std::vector<int> cycle_from_parents(const std::vector<int>& parent, const std::vector<int>& depth,
                                    int u, int w) {
    std::vector<int> pu{u}, pw{w};
    int a = u, b = w;
    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
    while (a != b) {
        pu.push_back(a = parent[a]);
        pw.push_back(b = parent[b]);
    }
    std::vector<int> cyc(pu);
    for (int i = int(pw.size()) - 2; i >= 0; --i) cyc.push_back(pw[i]);
    return cyc;
}

// Short (odd) cycle in g[mask] via BFS from every root; empty if none.
// The "odd" variant demands an odd cycle (2-coloring conflict).
std::vector<int> find_short_cycle(const Graph& g, const Bitset& mask, bool odd) {
    int n = g.vertex_count();
    std::vector<int> parent(n), depth(n), color(n);
    std::vector<int> queue;
    std::vector<int> best;
    for (int root = mask.first(); root != -1; root = mask.next(root)) {
        if (!best.empty() && best.size() == 3) break;
        std::vector<char> seen(n, 0);
        parent[root] = -1;
        depth[root] = 0;
        color[root] = 0;
        seen[root] = 1;
        queue.assign(1, root);
        int found_u = -1, found_w = -1, found_len = best.empty() ? INT32_MAX : int(best.size());
        for (size_t qi = 0; qi < queue.size() && found_u == -1; ++qi) {
            int u = queue[qi];
            Bitset nb = g.neighbor_bits(u);
            nb &= mask;
            for (int w = nb.first(); w != -1; w = nb.next(w)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (w != parent[u] && parent[w] != u) {
                    if (odd && color[w] != color[u]) continue;
                    int len = depth[u] + depth[w] + 1;
                    if (len < found_len) {
                        found_u = u;
                        found_w = w;
                        found_len = len;
                        break;
                    }
                }
            }
        }
        if (found_u != -1) {
            auto cyc = cycle_from_parents(parent, depth, found_u, found_w);
            if (best.empty() || cyc.size() < best.size()) best = cyc;
        }
    }
    return best;
}

bool remainder_ok(SolutionTag base, const Graph& g, const Bitset& removed) {
    Bitset rest = removed.complement_set();
    switch (base) {
        case SolutionTag::VertexCover: return subset_edge_count(g, rest) == 0;
        case SolutionTag::FeedbackVertexSet: return subset_is_forest(g, rest);
        default: return subset_is_bipartite(g, rest);
    }
}

// Iteratively strips degree <= 1 vertices; they lie on no cycle.
Bitset peel_acyclic_fringe(const Graph& g, Bitset mask) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = mask.first(); v != -1; v = mask.next(v)) {
            if (g.neighbor_bits(v).count_and(mask) <= 1) {
                mask.reset(v);
                changed = true;
            }
        }
    }
    return mask;
}

struct TransversalBnB {
    const Graph& g;
    bool odd;
    SearchBudget budget;
    uint64_t nodes = 0;
    Bitset best;
    int best_count = 0;
    bool have_best = false;

    TransversalBnB(const Graph& gg, bool oddmode, const SearchBudget& b)
        : g(gg), odd(oddmode), budget(b), best(gg.vertex_count()) {}

    int packing_lower_bound(Bitset mask) {
        int lb = 0;
        while (true) {
            mask = peel_acyclic_fringe(g, mask);
            auto cyc = find_short_cycle(g, mask, odd);
            if (cyc.empty()) break;
            ++lb;
            for (int v : cyc) mask.reset(v);
        }
        return lb;
    }

    void greedy_incumbent() {
        Bitset mask = g.full_set();
        Bitset removed(g.vertex_count());
        while (true) {
            Bitset core = peel_acyclic_fringe(g, mask);
            auto cyc = find_short_cycle(g, core, odd);
            if (cyc.empty()) break;
            int pick = cyc[0], bestdeg = -1;
            for (int v : cyc) {
                int d = g.neighbor_bits(v).count_and(mask);
                if (d > bestdeg) {
                    bestdeg = d;
                    pick = v;
                }
            }
            removed.set(pick);
            mask.reset(pick);
        }
        best = removed;
        best_count = removed.count();
        have_best = true;
    }

    void rec(Bitset mask, Bitset removed, int removed_count, Bitset forbidden) {
        if (++nodes > budget.max_nodes || (budget.cancel && *budget.cancel))
            throw BudgetExceeded("transversal branch-and-bound budget exceeded");
        Bitset core = peel_acyclic_fringe(g, mask);
        auto cyc = find_short_cycle(g, core, odd);
        if (cyc.empty()) {
            if (!have_best || removed_count < best_count) {
                best = removed;
                best_count = removed_count;
                have_best = true;
            }
            return;
        }
        if (have_best) {
            if (removed_count + 1 >= best_count) return;
            if (removed_count + packing_lower_bound(core) >= best_count) return;
        }
        for (int v : cyc) {
            if (forbidden.test(v)) continue;
            Bitset m2 = mask;
            m2.reset(v);
            Bitset r2 = removed;
            r2.set(v);
            rec(m2, r2, removed_count + 1, forbidden);
            forbidden.set(v);
        }
    }

    VertexSet solve() {
        greedy_incumbent();
        rec(g.full_set(), Bitset(g.vertex_count()), 0, Bitset(g.vertex_count()));
        return best.to_vector();
    }
};

VertexSet min_transversal_subset_enum(SolutionTag base, const Graph& g) {
    int n = g.vertex_count();
    VertexSet result;
    bool found = false;
    for_each_subset(g.vertices(), 0, n, [&](const VertexSet& s) {
        Bitset mask = Bitset::of(n, s);
        if (remainder_ok(base, g, mask)) {
            result = s;
            found = true;
            return false;
        }
        return true;
    });
    assert(found);
    (void)found;
    return result;
}

VertexSet min_transversal_plain(SolutionTag base, const Graph& g, Engine engine,
                                const SearchBudget& budget) {
    if (base == SolutionTag::VertexCover) return min_vertex_cover(g).vertices;
    if (engine == Engine::Auto) engine = g.vertex_count() <= 14 ? Engine::SubsetEnum : Engine::BranchAndBound;
    if (engine == Engine::SubsetEnum) return min_transversal_subset_enum(base, g);
    TransversalBnB bnb(g, base == SolutionTag::OddCycleTransversal, budget);
    return bnb.solve();
}

}  // namespace

TransversalSolution min_fvs(const Graph& g, Engine engine, const SearchBudget& budget) {
    return {SolutionTag::FeedbackVertexSet,
            min_transversal_plain(SolutionTag::FeedbackVertexSet, g, engine, budget)};
}

TransversalSolution min_oct(const Graph& g, Engine engine, const SearchBudget& budget) {
    return {SolutionTag::OddCycleTransversal,
            min_transversal_plain(SolutionTag::OddCycleTransversal, g, engine, budget)};
}

// ------------------------------------------------ connected extension search

namespace {

struct ConnectedGrowth {
    const Graph& g;
    SolutionTag base;
    Bitset wbits;
    SearchBudget budget;
    uint64_t nodes = 0;
    VertexSet best;
    bool have_best = false;

    ConnectedGrowth(const Graph& gg, SolutionTag b, const Bitset& w, const SearchBudget& bud)
        : g(gg), base(b), wbits(w), budget(bud) {}

    void consider(const Bitset& s) {
        if (!wbits.is_subset_of(s)) return;
        if (!remainder_ok(base, g, s)) return;
        VertexSet v = s.to_vector();
        if (!have_best || better_solution(v, best)) {
            best = std::move(v);
            have_best = true;
        }
    }

    void rec(Bitset& s, Bitset& forb, int s_count) {
        if (++nodes > budget.max_nodes || (budget.cancel && *budget.cancel))
            throw BudgetExceeded("connected growth budget exceeded");
        if (have_best && s_count >= int(best.size())) return;
        Bitset frontier = open_neighborhood_bits(g, s);
        frontier.andnot_assign(forb);
        int u = frontier.first();
        if (u == -1) return;
        s.set(u);
        consider(s);
        rec(s, forb, s_count + 1);
        s.reset(u);
        if (wbits.test(u)) return;  // excluding a required vertex kills the branch
        forb.set(u);
        rec(s, forb, s_count);
        forb.reset(u);
    }

    std::optional<TransversalSolution> solve(SolutionTag result_tag) {
        int n = g.vertex_count();
        if (wbits.none() && remainder_ok(base, g, Bitset(n)))
            return TransversalSolution{result_tag, {}};  // empty set, connected by convention
        int max_anchor = wbits.none() ? n - 1 : wbits.first();
        for (int a = 0; a <= max_anchor; ++a) {
            Bitset s(n), forb(n);
            for (int v = 0; v < a; ++v) forb.set(v);
            if (forb.intersects(wbits)) break;
            s.set(a);
            consider(s);
            rec(s, forb, 1);
        }
        if (!have_best) return std::nullopt;
        return TransversalSolution{result_tag, best};
    }
};

SolutionTag connected_tag_for(SolutionTag base) {
    switch (base) {
        case SolutionTag::VertexCover: return SolutionTag::ConnectedVertexCoverExt;
        case SolutionTag::FeedbackVertexSet: return SolutionTag::ConnectedFeedbackVertexSetExt;
        default: return SolutionTag::ConnectedOddCycleTransversalExt;
    }
}

}  // namespace

std::optional<TransversalSolution> min_extension(SolutionTag base, const Graph& g,
                                                 const VertexSet& w, bool connected,
                                                 const SearchBudget& budget) {
    for (int v : w)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("w vertex out of range");
    if (!connected) {
        Bitset keep = g.full_set();
        for (int v : w) keep.reset(v);
        auto sub = induced_subgraph(g, keep);
        VertexSet inner = min_transversal_plain(base, sub.graph, Engine::Auto, budget);
        VertexSet s = w;
        for (int u : inner) s.push_back(sub.to_parent[u]);
        std::sort(s.begin(), s.end());
        return TransversalSolution{base, s};
    }
    ConnectedGrowth search(g, base, Bitset::of(g.vertex_count(), w), budget);
    return search.solve(connected_tag_for(base));
}

std::optional<TransversalSolution> max_induced_forest(const Graph& g, const VertexSet& forbidden,
                                                      bool complement_connected) {
    auto r = min_extension(SolutionTag::FeedbackVertexSet, g, forbidden, complement_connected);
    if (!r) return std::nullopt;
    Bitset f = Bitset::of(g.vertex_count(), r->vertices).complement_set();
    return TransversalSolution{SolutionTag::MaxInducedForest, f.to_vector()};
}

std::optional<TransversalSolution> max_induced_bipartite(const Graph& g,
                                                         const VertexSet& forbidden,
                                                         bool complement_connected) {
    auto r = min_extension(SolutionTag::OddCycleTransversal, g, forbidden, complement_connected);
    if (!r) return std::nullopt;
    Bitset f = Bitset::of(g.vertex_count(), r->vertices).complement_set();
    return TransversalSolution{SolutionTag::MaxInducedBipartite, f.to_vector()};
}

// --------------------------------------------- dominating set / lemma tools

namespace {

bool is_dominating(const Graph& g, const Bitset& s) {
    return closed_neighborhood_bits(g, s).count() == g.vertex_count();
}

// All maximal cliques (Bron-Kerbosch with greedy pivot); stops early when
// `fn` returns false.
void maximal_cliques(const Graph& g, Bitset r, Bitset p, Bitset x,
                     const std::function<bool(const Bitset&)>& fn, bool& stop) {
    if (stop) return;
    if (p.none() && x.none()) {
        if (!fn(r)) stop = true;
        return;
    }
    Bitset px = p;
    px |= x;
    int pivot = -1, bestdeg = -1;
    px.for_each([&](int v) {
        int d = g.neighbor_bits(v).count_and(p);
        if (d > bestdeg) {
            bestdeg = d;
            pivot = v;
        }
    });
    Bitset cand = p;
    if (pivot != -1) cand.andnot_assign(g.neighbor_bits(pivot));
    for (int v = cand.first(); v != -1 && !stop; v = cand.next(v)) {
        Bitset r2 = r;
        r2.set(v);
        Bitset p2 = p;
        p2 &= g.neighbor_bits(v);
        Bitset x2 = x;
        x2 &= g.neighbor_bits(v);
        maximal_cliques(g, r2, p2, x2, fn, stop);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

VertexSet small_connected_dominating_set(const Graph& g, int s) {
    int n = g.vertex_count();
    if (n == 0) return {};
    if (!subset_is_connected(g, g.full_set()))
        throw std::invalid_argument("small_connected_dominating_set: graph not connected");
    if (n == 1) return {0};

    // greedy clique growth from every start vertex, stopping at domination
    for (int start = 0; start < n; ++start) {
        Bitset c(n);
        c.set(start);
        if (is_dominating(g, c)) return c.to_vector();
        Bitset common = g.neighbor_bits(start);
        while (common.any()) {
            int pick = -1, bestdeg = -1;
            common.for_each([&](int v) {
                int d = g.degree(v);
                if (d > bestdeg) {
                    bestdeg = d;
                    pick = v;
                }
            });
            c.set(pick);
            common &= g.neighbor_bits(pick);
            if (is_dominating(g, c)) return c.to_vector();
        }
    }

    // bounded subset enumeration
    int bound = 2 * s * s + s + 3;
    VertexSet found;
    for_each_subset(g.vertices(), 1, bound, [&](const VertexSet& cand) {
        Bitset b = Bitset::of(n, cand);
        if (subset_is_connected(g, b) && is_dominating(g, b)) {
            found = cand;
            return false;
        }
        return true;
    });
    if (!found.empty()) return found;

    // exact backstop: any dominating clique extends to a maximal dominating one
    Bitset full = g.full_set();
    VertexSet clique_found;
    bool stop = false;
    maximal_cliques(g, Bitset(n), full, Bitset(n),
                    [&](const Bitset& clq) {
                        if (is_dominating(g, clq)) {
                            clique_found = clq.to_vector();
                            return false;
                        }
                        return true;
                    },
                    stop);
    if (!clique_found.empty()) return clique_found;
    throw OutOfClassError("no dominating clique and no small connected dominating set");
}

DoubleNeighborReduction reduce_by_double_neighbors(const Graph& g, const VertexSet& j, int y) {
    int n = g.vertex_count();
    Bitset jb = Bitset::of(n, j);
    if (!set_contains(j, y)) throw std::invalid_argument("y must belong to j");
    if (!subset_is_independent(g, jb)) throw std::invalid_argument("j must be independent");
    Bitset rest = jb.complement_set();
    Bitset ynb = g.neighbor_bits(y);
    if ((rest.andnot(ynb)).any())
        throw std::invalid_argument("y must be adjacent to every vertex outside j");

    DoubleNeighborReduction out;
    Bitset removed(n);
    for (int v : j) {
        if (v == y) continue;
        Bitset nb = g.neighbor_bits(v);
        if (subset_edge_count(g, nb) > 0) removed.set(v);
    }
    out.removed = removed.to_vector();
    auto sub = induced_subgraph(g, removed.complement_set());
    out.graph = sub.graph;
    out.to_new = sub.from_parent;
    for (int v : j)
        if (!removed.test(v)) out.j_remaining_new.push_back(sub.from_parent[v]);
    std::sort(out.j_remaining_new.begin(), out.j_remaining_new.end());
    return out;
}

const SubroutineProvider& SubroutineProvider::oracle_backed() {
    static SubroutineProvider p{
        [](const Graph& g) { return max_independent_set(g); },
        [](const Graph& g, const VertexSet& w) {
            return min_extension(SolutionTag::VertexCover, g, w, true);
        }};
    return p;
}

ExtensionPrep prepare_extension_input(const Graph& g, const VertexSet& w,
                                      const std::function<bool(const Graph&)>& component_clean) {
    ExtensionPrep out;
    auto comps = connected_components(g);
    Bitset wb = Bitset::of(g.vertex_count(), w);
    std::vector<int> relevant;
    for (int i = 0; i < int(comps.size()); ++i) {
        bool touches_w = false;
        for (int v : comps[i])
            if (wb.test(v)) touches_w = true;
        if (touches_w) {
            relevant.push_back(i);
            continue;
        }
        auto sub = induced_subgraph(g, comps[i]);
        if (!component_clean(sub.graph)) relevant.push_back(i);
    }
    if (relevant.empty()) {
        out.trivial = true;
        return out;
    }
    if (relevant.size() > 1) {
        out.infeasible = true;
        return out;
    }
    auto sub = induced_subgraph(g, comps[relevant[0]]);
    out.sub = sub.graph;
    out.to_parent = sub.to_parent;
    for (int v : w) out.w_sub.push_back(sub.from_parent[v]);
    std::sort(out.w_sub.begin(), out.w_sub.end());
    return out;
}

// --------------------------------------------------------- CVC pipeline

namespace {

struct Quotient {
    Graph graph;
    std::vector<int> cls;               // old vertex -> class id
    std::vector<VertexSet> members;     // class id -> original vertices
};

// Contracts every connected component of g[forced] to a single vertex.
// Class ids are assigned in ascending order of their minimum original vertex.
Quotient quotient_by_forced(const Graph& g, const Bitset& forced) {
    int n = g.vertex_count();
    Quotient q;
    q.cls.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (q.cls[v] != -1) continue;
        int id = int(q.members.size());
        if (forced.test(v)) {
            Bitset comp = subset_component_of(g, forced, v);
            comp.for_each([&](int u) { q.cls[u] = id; });
            q.members.push_back(comp.to_vector());
        } else {
            q.cls[v] = id;
            q.members.push_back({v});
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int a = q.cls[u], b = q.cls[v];
            if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
        }
    q.graph = Graph::from_edges(int(q.members.size()), edges);
    return q;
}

void note(const PipelineOptions& opts, const std::string& msg) {
    if (opts.diagnostics) opts.diagnostics->push_back(msg);
}

}  // namespace

std::optional<TransversalSolution> cvc_extension_pipeline(const Graph& g, const VertexSet& w,
                                                          int s, const SubroutineProvider& sub,
                                                          const PipelineOptions& opts) {
    int n = g.vertex_count();
    for (int v : w)
        if (v < 0 || v >= n) throw std::invalid_argument("w vertex out of range");
    if (n == 0) return TransversalSolution{SolutionTag::ConnectedVertexCoverExt, {}};
    if (!subset_is_connected(g, g.full_set()))
        throw std::invalid_argument("cvc_extension_pipeline: graph not connected");
    if (g.edge_count() == 0)  // connected and edgeless means a single vertex
        return TransversalSolution{SolutionTag::ConnectedVertexCoverExt, w};

    const SolutionTag tag = SolutionTag::ConnectedVertexCoverExt;
    VertexSet d = small_connected_dominating_set(g, s);
    Bitset dbits = Bitset::of(n, d);
    bool d_is_clique = subset_is_clique(g, dbits);
    Bitset wbits = Bitset::of(n, w);
    VertexSet d_minus_w = set_difference(d, w);

    std::optional<VertexSet> best;
    auto record = [&](const VertexSet& cand) {
        if (!validate_solution(g, tag, cand, w)) return;
        if (!best || better_solution(cand, *best)) best = cand;
    };

    // Per-guess exact solve on the quotient, used both as the documented
    // oracle fallback and for the legitimacy checks below.
    auto direct_on_quotient = [&](const Quotient& q, const Bitset& dstar,
                                  const Bitset& forced_orig) -> std::optional<VertexSet> {
        Bitset keep_cls(int(q.members.size()));
        keep_cls.set_all();
        dstar.for_each([&](int v) { keep_cls.reset(q.cls[v]); });
        auto subg = induced_subgraph(q.graph, keep_cls);
        VertexSet forced_cls;
        forced_orig.for_each([&](int v) {
            int c = subg.from_parent[q.cls[v]];
            if (c >= 0) forced_cls.push_back(c);
        });
        std::sort(forced_cls.begin(), forced_cls.end());
        forced_cls.erase(std::unique(forced_cls.begin(), forced_cls.end()), forced_cls.end());
        auto r = sub.cvc_ext(subg.graph, forced_cls);
        if (!r) return std::nullopt;
        VertexSet lifted;
        for (int c : r->vertices)
            for (int orig : q.members[subg.to_parent[c]]) lifted.push_back(orig);
        std::sort(lifted.begin(), lifted.end());
        return lifted;
    };

    int max_guess = d_is_clique ? std::min<int>(1, int(d_minus_w.size())) : int(d_minus_w.size());
    for_each_subset(d_minus_w, 0, max_guess, [&](const VertexSet& dstar_v) {
        if (dstar_v.empty()) {
            // Case: nothing guessed out; D stays whole and dominates.
            Bitset keep = g.full_set();
            keep.andnot_assign(dbits);
            keep.andnot_assign(wbits);
            auto rest = induced_subgraph(g, keep);
            TransversalSolution mis = sub.mis(rest.graph);
            Bitset cover = rest.graph.full_set();
            for (int v : mis.vertices) cover.reset(v);
            VertexSet cand = set_union(d, w);
            cover.for_each([&](int v) { cand.push_back(rest.to_parent[v]); });
            std::sort(cand.begin(), cand.end());
            record(cand);
            return true;
        }
        Bitset dstar = Bitset::of(n, dstar_v);
        if (!subset_is_independent(g, dstar)) return true;
        Bitset gm = dstar.complement_set();
        if (!subset_is_connected(g, gm)) return true;

        Bitset dr = dbits.andnot(dstar);  // D \ D*
        Bitset nbr_dstar = open_neighborhood_bits(g, dstar);
        Bitset forced = dr | wbits | nbr_dstar;

        if (dr.none()) {
            // No anchor vertex for the contraction machinery; documented
            // fallback straight to the completion oracle.
            Quotient q = quotient_by_forced(g, forced);
            note(opts, "guess removes all of D: direct completion call");
            if (auto cand = direct_on_quotient(q, dstar, forced)) record(*cand);
            return true;
        }

        bool dr_connected = subset_is_connected(g, dr);
        if (!dr_connected) {
            // Connector forcing can overshoot; keep the exact per-guess value too.
            Quotient q0 = quotient_by_forced(g, forced);
            if (auto cand = direct_on_quotient(q0, dstar, forced)) record(*cand);
            note(opts, "kept dominating part disconnected: oracle fallback recorded");

            if (opts.enumerate_connector_paths) {
                // Exhaustive connector systems, feasible only on tiny inputs.
                int comps = 0;
                Bitset left = dr;
                while (left.any()) {
                    left.andnot_assign(subset_component_of(g, dr, left.first()));
                    ++comps;
                }
                int cap = (5 + 2 * s - 3) * std::max(0, comps - 1);
                Bitset pool = gm.andnot(forced);
                for_each_subset(pool.to_vector(), 0, cap, [&](const VertexSet& conn) {
                    Bitset grown = dr;
                    for (int v : conn) grown.set(v);
                    if (!subset_is_connected(g, grown)) return true;
                    Bitset forced2 = forced;
                    for (int v : conn) forced2.set(v);
                    Quotient q = quotient_by_forced(g, forced2);
                    if (auto cand = direct_on_quotient(q, dstar, forced2)) record(*cand);
                    return true;
                });
                return true;
            }
            // BFS shortest-path connectors inside g - D*.
            Bitset grown = dr;
            while (true) {
                Bitset home = subset_component_of(g, grown, grown.first());
                Bitset rest_dr = dr.andnot(home);
                if (rest_dr.none()) break;
                // BFS from home through g - D* to the nearest other piece.
                std::vector<int> par(n, -2);
                std::vector<int> queue;
                home.for_each([&](int v) {
                    par[v] = -1;
                    queue.push_back(v);
                });
                int hit = -1;
                for (size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
                    int u = queue[qi];
                    Bitset nb = g.neighbor_bits(u);
                    nb &= gm;
                    for (int x = nb.first(); x != -1; x = nb.next(x)) {
                        if (par[x] != -2) continue;
                        par[x] = u;
                        if (rest_dr.test(x)) {
                            hit = x;
                            break;
                        }
                        queue.push_back(x);
                    }
                }
                if (hit == -1) break;  // cannot connect; fallback already recorded
                for (int x = hit; x != -1 && par[x] != -1; x = par[x]) grown.set(x);
                grown.set(hit);
            }
            if (!subset_is_connected(g, grown)) return true;
            forced |= grown;
        }

        Quotient q = quotient_by_forced(g, forced);
        int nq = q.graph.vertex_count();
        Bitset keep_cls(nq);
        keep_cls.set_all();
        dstar.for_each([&](int v) { keep_cls.reset(q.cls[v]); });
        auto g2 = induced_subgraph(q.graph, keep_cls);  // quotient minus D*

        int y = g2.from_parent[q.cls[dr.first()]];
        VertexSet jstar;
        (nbr_dstar | wbits).for_each([&](int v) { jstar.push_back(g2.from_parent[q.cls[v]]); });
        jstar.push_back(y);
        std::sort(jstar.begin(), jstar.end());
        jstar.erase(std::unique(jstar.begin(), jstar.end()), jstar.end());

        // cover-complete validation; off-promise inputs fall back to the oracle
        Bitset jb = Bitset::of(g2.graph.vertex_count(), jstar);
        Bitset outside = jb.complement_set();
        bool y_dominates = outside.is_subset_of(g2.graph.neighbor_bits(y));
        if (!subset_is_independent(g2.graph, jb) || !y_dominates) {
            note(opts, "cover-complete preconditions failed: oracle fallback");
            if (auto cand = direct_on_quotient(q, dstar, forced)) record(*cand);
            return true;
        }

        auto red = reduce_by_double_neighbors(g2.graph, jstar, y);
        auto r = sub.cvc_ext(red.graph, red.j_remaining_new);
        if (!r) return true;
        // lift: add J' back, map through the two reductions, expand classes
        std::vector<int> red_to_old(red.graph.vertex_count(), -1);
        for (int u = 0; u < g2.graph.vertex_count(); ++u)
            if (red.to_new[u] >= 0) red_to_old[red.to_new[u]] = u;
        Bitset sol_g2(g2.graph.vertex_count());
        for (int v : r->vertices) sol_g2.set(red_to_old[v]);
        for (int v : red.removed) sol_g2.set(v);
        VertexSet cand;
        sol_g2.for_each([&](int c) {
            for (int orig : q.members[g2.to_parent[c]]) cand.push_back(orig);
        });
        std::sort(cand.begin(), cand.end());
        record(cand);
        return true;
    });

    if (!best) return std::nullopt;
    return TransversalSolution{tag, *best};
}

}  // namespace tvlab::oracle
