#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "tvlab/graph.hpp"

namespace tvlab::genio {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: header "n m", then m lines "u v" with 0 <= u < v < n.
Graph parse_edgelist(const std::string& text);
std::string serialize_edgelist(const Graph& g);

// Standard graph6 encoding (all three length forms), bit-exact.
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// All 2^(n choose 2) labeled graphs in deterministic mask order; n <= 8.
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn);
uint64_t labeled_graph_count(int n);

// splitmix64; documented so fixtures can be reproduced from the seed alone.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
    double real() { return double(next() >> 11) * 0x1.0p-53; }
};

Graph random_graph(int n, double density, SplitMix64& rng);
// Constructed from a random cotree, so always P4-free.
Graph random_cograph(int n, SplitMix64& rng);

enum class GraphClass { Any, Cograph, Sp1P3Free, Sp1P5Free, Bipartite };

struct GeneratorSpec {
    GraphClass cls = GraphClass::Any;
    int s = 0;  // for the sP1+P3 / sP1+P5 classes
    int n = 0;
    double density = 0.5;
    uint64_t seed = 0;
    int max_rejects = 500;
    bool allow_repair = true;  // fall back to edge-addition repair of the last sample
};

struct GenStats {
    int attempts = 0;
    bool repaired = false;
    int repair_edges = 0;
};

struct RejectionBudgetError : std::runtime_error {
    int attempts;
    RejectionBudgetError(const std::string& what, int att)
        : std::runtime_error(what), attempts(att) {}
};

// Output is certified in-class before being returned.
Graph random_in_class(const GeneratorSpec& spec, GenStats* stats = nullptr);

}  // namespace tvlab::genio
