#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tvlab/graph.hpp"

namespace tvlab::run {

using Json = nlohmann::ordered_json;

struct SolveRequest {
    Graph g;
    std::string instance_name = "-";
    std::string problem;  // vc | cvc | fvs | cfvs | oct | coct
    VertexSet w;
    std::string klass = "auto";   // auto | p4free | sp1p3:<s> | none
    std::string engine = "auto";  // auto | specialized | oracle | both
    uint64_t seed = 0;
};

// exit codes: 0 solved, 1 internal/mismatch, 2 infeasible, 3 out-of-class,
// 4 input error
struct SolveOutcome {
    Json report;
    int exit_code = 0;
};

SolveOutcome run_solve(const SolveRequest& req);

// FNV-1a over the canonical edge list text.
std::string instance_digest(const Graph& g);

// Reads a graph file; graph6 and edge-list are distinguished by content.
Graph load_graph(const std::string& path);
Graph parse_graph_text(const std::string& text);

}  // namespace tvlab::run
