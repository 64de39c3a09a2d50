#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvlab/graph.hpp"

namespace tvlab::pattern {

// A linear forest given by its multiset of path orders, e.g. {3,1,1} for
// 2P1+P3. Canonical form keeps the orders sorted descending.
struct LinearForestPattern {
    std::vector<int> paths;

    LinearForestPattern() = default;
    explicit LinearForestPattern(std::vector<int> p);

    int total_order() const;
    bool operator==(const LinearForestPattern&) const = default;
};

// Text syntax: '+'-separated terms, each "[c]P<k>" with optional positive
// multiplier c. Examples: "2P1+P3", "P2+P5", "P6".
LinearForestPattern parse_pattern(const std::string& text);
std::string to_string(const LinearForestPattern& p);

// One vertex list per path, in pattern (descending-order) sequence. Each list
// induces a path in order; lists are pairwise anti-complete.
struct InducedCopy {
    std::vector<std::vector<int>> assignment;
    std::vector<int> all_vertices() const;
};

bool is_valid_copy(const Graph& g, const LinearForestPattern& h, const InducedCopy& copy);

// Finds an induced copy of h in g, or nullopt. Deterministic: returns the
// lexicographically least assignment under ascending vertex order.
std::optional<InducedCopy> find_induced(const Graph& g, const LinearForestPattern& h);

bool is_hfree(const Graph& g, const LinearForestPattern& h);

struct CographCheck {
    bool is_cograph = false;
    std::vector<int> p4;  // an induced P4 in path order when !is_cograph
};
CographCheck is_cograph(const Graph& g);

}  // namespace tvlab::pattern
