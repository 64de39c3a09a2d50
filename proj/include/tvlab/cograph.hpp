#pragma once

#include <optional>
#include <vector>

#include "tvlab/graph.hpp"
#include "tvlab/oracle.hpp"

namespace tvlab::cograph {

// Canonical cotree: leaves are vertices, internal nodes are tagged union or
// join with at least two children, and tags alternate on every root-to-leaf
// path (guaranteed by the component / co-component recursion).
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    struct Node {
        Kind kind = Kind::Leaf;
        int vertex = -1;  // leaves only
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = -1;
};

struct CotreeResult {
    bool is_cograph = false;
    Cotree tree;
    std::vector<int> p4;  // certificate when !is_cograph, in path order
};

CotreeResult build_cotree(const Graph& g);
Graph evaluate_cotree(const Cotree& t);

struct BipartiteSplit {
    VertexSet x, y;  // nonempty, disjoint, cover V, x complete to y
};

// Spanning complete bipartite split of a connected P4-free graph on >= 2
// vertices: one complement component versus the rest. Throws
// std::invalid_argument on precondition violations.
BipartiteSplit spanning_split(const Graph& g);

// Cotree dynamic programs; all require a P4-free input (OutOfClassError with
// a P4 certificate otherwise).
oracle::TransversalSolution max_independent_set(const Graph& g);
oracle::TransversalSolution max_induced_forest(const Graph& g);
oracle::TransversalSolution max_induced_bipartite(const Graph& g);
oracle::TransversalSolution min_fvs(const Graph& g);
oracle::TransversalSolution min_oct(const Graph& g);

// Two-step extension algorithms (dominating-edge step plus the one-side
// step). Inputs may be disconnected; the shared component preprocessing
// applies. nullopt means infeasible.
std::optional<oracle::TransversalSolution> min_cfvs_extension(
    const Graph& g, const VertexSet& w,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed());
std::optional<oracle::TransversalSolution> min_coct_extension(
    const Graph& g, const VertexSet& w,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed());

}  // namespace tvlab::cograph
