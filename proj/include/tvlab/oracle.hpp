#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "tvlab/graph.hpp"

namespace tvlab::oracle {

struct TransversalSolution {
    SolutionTag tag = SolutionTag::VertexCover;
    VertexSet vertices;
    int objective() const { return int(vertices.size()); }
};

// Thrown when an input promised to be inside a graph class turns out not to
// support the guaranteed structure.
struct OutOfClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cooperative cancellation / node budget for the long-running searches.
struct SearchBudget {
    const bool* cancel = nullptr;
    uint64_t max_nodes = UINT64_MAX;
};

enum class Engine { Auto, SubsetEnum, BranchAndBound };

// ----- vertex cover / independent set -----

TransversalSolution max_independent_set(const Graph& g);
TransversalSolution min_vertex_cover(const Graph& g);

// Mask-restricted forms used by the pattern search and the class solvers.
Bitset max_independent_set_masked(const Graph& g, const Bitset& mask);
bool mis_at_least(const Graph& g, const Bitset& mask, int need);

// Folklore booster: MIS(g) as the best of 1 + inner(g - N[v]) over all v,
// plus the empty graph case. `inner` must be exact on every g - N[v].
TransversalSolution mis_p1_boost(const Graph& g,
                                 const std::function<TransversalSolution(const Graph&)>& inner);

// ----- feedback vertex set / odd cycle transversal -----

TransversalSolution min_fvs(const Graph& g, Engine engine = Engine::Auto,
                            const SearchBudget& budget = {});
TransversalSolution min_oct(const Graph& g, Engine engine = Engine::Auto,
                            const SearchBudget& budget = {});

// ----- extension variants -----

// Smallest S containing w such that g - S is edgeless / a forest / bipartite
// (per `base`), with g[S] connected when `connected`. Returns nullopt when
// infeasible. Non-connected extensions reduce to the plain problem on g - w.
std::optional<TransversalSolution> min_extension(SolutionTag base, const Graph& g,
                                                 const VertexSet& w, bool connected,
                                                 const SearchBudget& budget = {});

// Largest induced forest / bipartite subgraph disjoint from `forbidden`,
// with connected complement when requested. Infeasible only when the
// complement-connectivity constraint cannot be met.
std::optional<TransversalSolution> max_induced_forest(const Graph& g, const VertexSet& forbidden,
                                                      bool complement_connected);
std::optional<TransversalSolution> max_induced_bipartite(const Graph& g,
                                                         const VertexSet& forbidden,
                                                         bool complement_connected);

// ----- connected vertex cover machinery -----

// A connected dominating set that is either a clique or has at most
// 2s^2+s+3 vertices. Tries dominating cliques first (greedy growth, then all
// maximal cliques), then bounded subset enumeration. Throws OutOfClassError
// when neither exists.
VertexSet small_connected_dominating_set(const Graph& g, int s);

struct DoubleNeighborReduction {
    Graph graph;                // g minus the removed vertices
    std::vector<int> to_new;    // old id -> new id, -1 for removed
    VertexSet removed;          // J' in original ids; lifting adds these back
    VertexSet j_remaining_new;  // J \ J' in new ids
};

// Removes the vertices of j \ {y} that have two adjacent neighbors outside j.
// Preconditions: j independent, y in j adjacent to every vertex of g - j.
DoubleNeighborReduction reduce_by_double_neighbors(const Graph& g, const VertexSet& j, int y);

// The two black-box subroutines the class-specific algorithms call. The
// default backend is the exact oracle; a polynomial implementation can be
// slotted in without touching the callers.
struct SubroutineProvider {
    std::function<TransversalSolution(const Graph&)> mis;
    std::function<std::optional<TransversalSolution>(const Graph&, const VertexSet&)> cvc_ext;
    static const SubroutineProvider& oracle_backed();
};

struct PipelineOptions {
    // When the kept part of the dominating set is disconnected, connector
    // paths are forced via BFS shortest paths by default; full path-system
    // enumeration is available but explodes combinatorially.
    bool enumerate_connector_paths = false;
    std::vector<std::string>* diagnostics = nullptr;
};

// Connected Vertex Cover Extension solved through the dominating-set /
// contraction / cover-complete-completion pipeline. g must be connected.
std::optional<TransversalSolution> cvc_extension_pipeline(const Graph& g, const VertexSet& w,
                                                          int s, const SubroutineProvider& sub,
                                                          const PipelineOptions& opts = {});

// ----- shared helpers -----

// Deterministic (size, lexicographic) comparison used for candidate reduction.
bool better_solution(const VertexSet& a, const VertexSet& b);

// Enumerates subsets of `pool` with size in [min_k, max_k], ascending by size
// then lexicographic. Callback returns false to stop.
void for_each_subset(const VertexSet& pool, int min_k, int max_k,
                     const std::function<bool(const VertexSet&)>& fn);

// Shared preprocessing for connected-extension solvers on possibly
// disconnected inputs: at most one component may need attention (intersects w
// or fails `component_clean`); otherwise the instance is infeasible.
struct ExtensionPrep {
    bool infeasible = false;
    bool trivial = false;     // no component needs attention: solution is empty
    Graph sub;                // the single relevant component
    std::vector<int> to_parent;
    VertexSet w_sub;
};
ExtensionPrep prepare_extension_input(const Graph& g, const VertexSet& w,
                                      const std::function<bool(const Graph&)>& component_clean);

}  // namespace tvlab::oracle
