#include "tvlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvlab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (g.bits_[u].test(v)) continue;
        g.bits_[u].set(v);
        g.bits_[v].set(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    if (n >= 3) e.push_back({n - 1, 0});
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph::from_edges(a + b, e);
}

Graph make_star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph::from_edges(leaves + 1, e);
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});          // outer C5
        e.push_back({i, i + 5});                // spokes
        e.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e;
    int na = a.vertex_count();
    for (int u = 0; u < na; ++u)
        for (int v : a.neighbors(u))
            if (u < v) e.push_back({u, v});
    for (int u = 0; u < b.vertex_count(); ++u)
        for (int v : b.neighbors(u))
            if (u < v) e.push_back({na + u, na + v});
    return Graph::from_edges(na + b.vertex_count(), e);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    return induced_subgraph(g, Bitset::of(g.vertex_count(), s));
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
    InducedSubgraph out;
    out.from_parent.assign(g.vertex_count(), -1);
    keep.for_each([&](int v) {
        if (v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
        out.from_parent[v] = int(out.to_parent.size());
        out.to_parent.push_back(v);
    });
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < int(out.to_parent.size()); ++u)
        for (int v : g.neighbors(out.to_parent[u])) {
            int nv = out.from_parent[v];
            if (nv > u) e.push_back({u, nv});
        }
    out.graph = Graph::from_edges(int(out.to_parent.size()), e);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

ContractResult contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: uv is not an edge");
    int n = g.vertex_count();
    ContractResult out;
    out.to_new.assign(n, -1);
    for (int t = 0; t < n; ++t) {
        if (t == v)
            out.to_new[t] = -1;  // fixed up below
        else
            out.to_new[t] = t - (t > v);
    }
    out.to_new[v] = out.to_new[u];
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (a >= b) continue;
            int na = out.to_new[a], nb = out.to_new[b];
            if (na == nb) continue;
            e.push_back({std::min(na, nb), std::max(na, nb)});
        }
    out.graph = Graph::from_edges(n - 1, e);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    Bitset seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Closes the cycle through tree edges: walks both endpoints up to their
// lowest common ancestor. Returns the cycle in vertex order.
std::vector<int> cycle_through(const std::vector<int>& parent, const std::vector<int>& depth,
                               int u, int w) {
    std::vector<int> pu{u}, pw{w};
    int a = u, b = w;
    while (depth[a] > depth[b]) {
        a = parent[a];
        pu.push_back(a);
    }
    while (depth[b] > depth[a]) {
        b = parent[b];
        pw.push_back(b);
    }
    while (a != b) {
        a = parent[a];
        b = parent[b];
        pu.push_back(a);
        pw.push_back(b);
    }
    // pu ends at the LCA; append pw reversed without the LCA.
    std::vector<int> cyc(pu);
    for (int i = int(pw.size()) - 2; i >= 0; --i) cyc.push_back(pw[i]);
    return cyc;
}

}  // namespace

BipartiteCheck is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    BipartiteCheck out;
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    out.bipartite = false;
                    out.odd_cycle = cycle_through(parent, depth, u, w);
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? out.parts.x : out.parts.y).push_back(v);
    return out;
}

ForestCheck is_forest(const Graph& g) {
    int n = g.vertex_count();
    ForestCheck out;
    std::vector<int> parent(n, -1), depth(n, 0);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (w != parent[u] && parent[w] != u) {
                    // BFS cross or back edge closes a cycle.
                    out.forest = false;
                    out.cycle = cycle_through(parent, depth, u, w);
                    return out;
                }
            }
        }
    }
    out.forest = true;
    return out;
}

bool subset_is_independent(const Graph& g, const Bitset& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && g.neighbor_bits(v).intersects(s)) ok = false;
    });
    return ok;
}

bool subset_is_clique(const Graph& g, const Bitset& s) {
    int k = s.count();
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && g.neighbor_bits(v).count_and(s) != k - 1) ok = false;
    });
    return ok;
}

bool subset_is_connected(const Graph& g, const Bitset& s) {
    int total = s.count();
    if (total <= 1) return true;
    Bitset seen(g.vertex_count());
    int start = s.first();
    seen.set(start);
    std::vector<int> stack{start};
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        Bitset nb = g.neighbor_bits(u);
        nb &= s;
        nb.andnot_assign(seen);
        nb.for_each([&](int w) {
            seen.set(w);
            ++reached;
            stack.push_back(w);
        });
    }
    return reached == total;
}

int subset_edge_count(const Graph& g, const Bitset& s) {
    int twice = 0;
    s.for_each([&](int v) { twice += g.neighbor_bits(v).count_and(s); });
    return twice / 2;
}

Bitset subset_component_of(const Graph& g, const Bitset& s, int v) {
    Bitset seen(g.vertex_count());
    seen.set(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        Bitset nb = g.neighbor_bits(u);
        nb &= s;
        nb.andnot_assign(seen);
        nb.for_each([&](int w) {
            seen.set(w);
            stack.push_back(w);
        });
    }
    return seen;
}

bool subset_is_forest(const Graph& g, const Bitset& s) {
    int verts = s.count();
    if (verts == 0) return true;
    int edges = subset_edge_count(g, s);
    if (edges >= verts) return false;
    // acyclic iff edges == verts - #components
    int comps = 0;
    Bitset left(s);
    while (left.any()) {
        Bitset comp = subset_component_of(g, left, left.first());
        left.andnot_assign(comp);
        ++comps;
    }
    return edges == verts - comps;
}

bool subset_is_bipartite(const Graph& g, const Bitset& s) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int start = s.first(); start != -1; start = s.next(start)) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.assign(1, start);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            Bitset nb = g.neighbor_bits(u);
            nb &= s;
            bool bad = false;
            nb.for_each([&](int w) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    bad = true;
                }
            });
            if (bad) return false;
        }
    }
    return true;
}

VertexSet neighborhood(const Graph& g, int u) { return g.neighbors(u); }

Bitset open_neighborhood_bits(const Graph& g, const Bitset& u) {
    Bitset nb(g.vertex_count());
    u.for_each([&](int v) { nb |= g.neighbor_bits(v); });
    nb.andnot_assign(u);
    return nb;
}

Bitset closed_neighborhood_bits(const Graph& g, const Bitset& u) {
    Bitset nb(u);
    u.for_each([&](int v) { nb |= g.neighbor_bits(v); });
    return nb;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& u) {
    return open_neighborhood_bits(g, Bitset::of(g.vertex_count(), u)).to_vector();
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    return subset_is_independent(g, Bitset::of(g.vertex_count(), s));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    return subset_is_clique(g, Bitset::of(g.vertex_count(), s));
}

bool is_dominating_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) return false;
    Bitset dom = g.neighbor_bits(u) | g.neighbor_bits(v);
    dom.set(u);
    dom.set(v);
    return dom.count() == g.vertex_count();
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    return subset_is_connected(g, Bitset::of(g.vertex_count(), s));
}

std::string to_string(SolutionTag t) {
    switch (t) {
        case SolutionTag::VertexCover: return "vc";
        case SolutionTag::ConnectedVertexCoverExt: return "cvc-ext";
        case SolutionTag::FeedbackVertexSet: return "fvs";
        case SolutionTag::ConnectedFeedbackVertexSetExt: return "cfvs-ext";
        case SolutionTag::OddCycleTransversal: return "oct";
        case SolutionTag::ConnectedOddCycleTransversalExt: return "coct-ext";
        case SolutionTag::MaxIndependentSet: return "mis";
        case SolutionTag::MaxInducedForest: return "max-induced-forest";
        case SolutionTag::MaxInducedBipartite: return "max-induced-bipartite";
    }
    return "?";
}

bool tag_is_connected_extension(SolutionTag t) {
    return t == SolutionTag::ConnectedVertexCoverExt ||
           t == SolutionTag::ConnectedFeedbackVertexSetExt ||
           t == SolutionTag::ConnectedOddCycleTransversalExt;
}

bool tag_is_maximization(SolutionTag t) {
    return t == SolutionTag::MaxIndependentSet || t == SolutionTag::MaxInducedForest ||
           t == SolutionTag::MaxInducedBipartite;
}

namespace {

bool valid_subset(const Graph& g, const VertexSet& s, std::string& reason) {
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            reason = "invalid vertex id";
            return false;
        }
        if (v <= prev) {
            reason = "vertex set not sorted or has duplicates";
            return false;
        }
        prev = v;
    }
    return true;
}

}  // namespace

ValidationResult validate_solution(const Graph& g, SolutionTag tag, const VertexSet& s,
                                   const VertexSet& w) {
    ValidationResult r;
    if (!valid_subset(g, s, r.reason) || !valid_subset(g, w, r.reason)) return r;
    Bitset sm = Bitset::of(g.vertex_count(), s);
    Bitset wm = Bitset::of(g.vertex_count(), w);

    if (tag_is_maximization(tag)) {
        if (sm.intersects(wm)) {
            r.reason = "S intersects W";
            return r;
        }
        switch (tag) {
            case SolutionTag::MaxIndependentSet:
                if (!subset_is_independent(g, sm)) {
                    r.reason = "S not independent";
                    return r;
                }
                break;
            case SolutionTag::MaxInducedForest:
                if (!subset_is_forest(g, sm)) {
                    r.reason = "S not a forest";
                    return r;
                }
                break;
            default:
                if (!subset_is_bipartite(g, sm)) {
                    r.reason = "S not bipartite";
                    return r;
                }
                break;
        }
        r.ok = true;
        return r;
    }

    if (!wm.is_subset_of(sm)) {
        r.reason = "W not contained in S";
        return r;
    }
    Bitset rest = sm.complement_set();
    switch (tag) {
        case SolutionTag::VertexCover:
        case SolutionTag::ConnectedVertexCoverExt:
            if (subset_edge_count(g, rest) > 0) {
                r.reason = "uncovered edge";
                return r;
            }
            break;
        case SolutionTag::FeedbackVertexSet:
        case SolutionTag::ConnectedFeedbackVertexSetExt:
            if (!subset_is_forest(g, rest)) {
                r.reason = "cycle in remainder";
                return r;
            }
            break;
        default:
            if (!subset_is_bipartite(g, rest)) {
                r.reason = "odd cycle in remainder";
                return r;
            }
            break;
    }
    if (tag_is_connected_extension(tag) && !subset_is_connected(g, sm)) {
        r.reason = "S not connected";
        return r;
    }
    r.ok = true;
    return r;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

}  // namespace tvlab
