#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvlab/graph.hpp"
#include "tvlab/oracle.hpp"

namespace tvlab::sp1p3 {

// Threshold governing the component-size case splits: max{3, 2s-1}.
int component_size_threshold(int s);

// Validator: a bipartite (sP1+P3)-free graph with a component on >=
// threshold vertices has at most s-1 other components, each on at most two
// vertices. Throws std::invalid_argument when the preconditions fail.
bool satisfies_component_structure(const Graph& g, int s);

// Validator: an (sP1+P3)-free tree has at most 4s internal vertices.
bool satisfies_internal_vertex_bound(const Graph& tree, int s);

// Constructive connector: R such that g[R u U] is connected with
// |R| <= 2s^2-2s+3 (g connected, (sP1+P3)-free). Built from an induced P3
// plus BFS shortest paths, then greedily pruned. Throws OutOfClassError when
// the bound cannot be met (signals an out-of-class input).
VertexSet connector_set(const Graph& g, const VertexSet& u, int s);

// Diagnostics for the multi-step case analyses: improving candidates per
// step. The reported optimum always equals the best recorded candidate.
struct CaseTrace {
    struct Candidate {
        std::string step;
        VertexSet vertices;  // the induced forest / bipartite side
    };
    std::vector<Candidate> candidates;
};

// The four solvers on (sP1+P3)-free inputs. All validate class membership
// (OutOfClassError carries the forbidden pattern in its message). The
// extension variants accept disconnected inputs via the shared component
// preprocessing and return nullopt when infeasible.
oracle::TransversalSolution min_fvs(
    const Graph& g, int s,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed(),
    CaseTrace* trace = nullptr);
oracle::TransversalSolution min_oct(
    const Graph& g, int s,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed(),
    CaseTrace* trace = nullptr);
std::optional<oracle::TransversalSolution> min_cfvs_extension(
    const Graph& g, const VertexSet& w, int s,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed(),
    CaseTrace* trace = nullptr);
std::optional<oracle::TransversalSolution> min_coct_extension(
    const Graph& g, const VertexSet& w, int s,
    const oracle::SubroutineProvider& sub = oracle::SubroutineProvider::oracle_backed(),
    CaseTrace* trace = nullptr);

}  // namespace tvlab::sp1p3
