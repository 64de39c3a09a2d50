#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/bitset.hpp"

namespace tvlab {

// Vertex subsets are kept as sorted vectors of valid vertex ids.
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is stored
// both as sorted neighbor lists and as per-vertex bitsets; the bitset form is
// what the enumeration-heavy solvers run on.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n), bits_(n, Bitset(n)) {}

    // Validates ids, rejects self-loops, ignores duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return bits_[u].test(v); }
    const VertexSet& neighbors(int u) const { return adj_[u]; }
    const Bitset& neighbor_bits(int u) const { return bits_[u]; }
    int degree(int u) const { return int(adj_[u].size()); }

    Bitset full_set() const {
        Bitset b(n_);
        b.set_all();
        return b;
    }
    VertexSet vertices() const {
        VertexSet v(n_);
        for (int i = 0; i < n_; ++i) v[i] = i;
        return v;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Bitset> bits_;
};

// Small named builders used throughout the test corpus and the generators.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int leaves);  // center is vertex 0
Graph make_petersen();
Graph disjoint_union(const Graph& a, const Graph& b);

struct Bipartition {
    VertexSet x, y;
};

// ----- induced subgraph / complement / contraction -----

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;    // new id -> old id
    std::vector<int> from_parent;  // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep);

Graph complement(const Graph& g);

struct ContractResult {
    Graph graph;
    std::vector<int> to_new;  // old id -> new id; u and v map to the merged vertex
};

// Contracts edge uv (must exist); the merged vertex keeps u's position.
ContractResult contract_edge(const Graph& g, int u, int v);

// ----- connectivity / cycles / bipartiteness -----

std::vector<VertexSet> connected_components(const Graph& g);

struct BipartiteCheck {
    bool bipartite = false;
    Bipartition parts;           // valid iff bipartite
    std::vector<int> odd_cycle;  // valid iff !bipartite; vertices in cycle order
};
BipartiteCheck is_bipartite(const Graph& g);

struct ForestCheck {
    bool forest = false;
    std::vector<int> cycle;  // valid iff !forest; vertices in cycle order
};
ForestCheck is_forest(const Graph& g);

// ----- subset predicates on masks (the solvers' workhorses) -----

bool subset_is_independent(const Graph& g, const Bitset& s);
bool subset_is_clique(const Graph& g, const Bitset& s);
// Empty and singleton sets count as connected.
bool subset_is_connected(const Graph& g, const Bitset& s);
bool subset_is_forest(const Graph& g, const Bitset& s);
bool subset_is_bipartite(const Graph& g, const Bitset& s);
int subset_edge_count(const Graph& g, const Bitset& s);
// Component of `s` (as induced subgraph) containing `v`, as a mask.
Bitset subset_component_of(const Graph& g, const Bitset& s, int v);

// ----- neighborhoods and simple set predicates -----

VertexSet neighborhood(const Graph& g, int u);
// Open set neighborhood N(U) = (union of N(u)) minus U.
VertexSet open_neighborhood(const Graph& g, const VertexSet& u);
Bitset open_neighborhood_bits(const Graph& g, const Bitset& u);
// Closed: N[U] = N(U) union U.
Bitset closed_neighborhood_bits(const Graph& g, const Bitset& u);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_dominating_edge(const Graph& g, int u, int v);
bool is_connected_subset(const Graph& g, const VertexSet& s);

// ----- solution validation -----

enum class SolutionTag {
    VertexCover,
    ConnectedVertexCoverExt,
    FeedbackVertexSet,
    ConnectedFeedbackVertexSetExt,
    OddCycleTransversal,
    ConnectedOddCycleTransversalExt,
    MaxIndependentSet,
    MaxInducedForest,
    MaxInducedBipartite,
};

std::string to_string(SolutionTag t);
bool tag_is_connected_extension(SolutionTag t);
bool tag_is_maximization(SolutionTag t);

struct ValidationResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// For transversal tags: g - s must be edgeless / a forest / bipartite and
// w must be contained in s; connected-extension tags additionally require
// g[s] connected (the empty set counts as connected). For maximization tags
// s itself must be independent / a forest / bipartite and disjoint from w.
ValidationResult validate_solution(const Graph& g, SolutionTag tag, const VertexSet& s,
                                   const VertexSet& w);

// Sorted-set helpers.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);

}  // namespace tvlab
