#pragma once

// Test-side reference implementations, kept independent of the library's
// search engines so they can serve as oracles for derived expectations.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "tvlab/graph.hpp"
#include "tvlab/pattern.hpp"

namespace testutil {

using tvlab::Graph;
using tvlab::VertexSet;

inline std::vector<int> mask_to_set(uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

// Smallest subset (by size, then lexicographic mask order) satisfying `ok`;
// nullopt if none. Only for n <= 20.
inline std::optional<VertexSet> brute_min_set(const Graph& g,
                                              const std::function<bool(const VertexSet&)>& ok) {
    int n = g.vertex_count();
    std::optional<VertexSet> best;
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s = mask_to_set(mask, n);
        if (best && s.size() >= best->size()) continue;
        if (ok(s)) best = s;
    }
    return best;
}

inline int brute_max_size(const Graph& g, const std::function<bool(const VertexSet&)>& ok) {
    int n = g.vertex_count();
    int best = -1;
    for (uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        VertexSet s = mask_to_set(mask, n);
        if (int(s.size()) > best && ok(s)) best = int(s.size());
    }
    return best;
}

inline bool set_is_independent(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

inline int brute_mis(const Graph& g) {
    return brute_max_size(g, [&](const VertexSet& s) { return set_is_independent(g, s); });
}

// Naive induced-linear-forest detector: assigns vertices to pattern slots by
// plain backtracking over all ordered choices, checking adjacency directly.
inline bool naive_has_induced(const Graph& g, const std::vector<int>& paths_desc) {
    int total = 0;
    for (int k : paths_desc) total += k;
    if (total > g.vertex_count()) return false;
    std::vector<int> flat;  // concatenated assignment
    std::vector<std::pair<int, int>> slot;  // (path index, position)
    for (int p = 0; p < int(paths_desc.size()); ++p)
        for (int i = 0; i < paths_desc[p]; ++i) slot.push_back({p, i});

    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == total) return true;
        auto [pi, pos] = slot[idx];
        for (int v = 0; v < g.vertex_count(); ++v) {
            bool ok = std::find(flat.begin(), flat.end(), v) == flat.end();
            for (int j = 0; ok && j < idx; ++j) {
                auto [pj, posj] = slot[j];
                bool want_edge = pj == pi && posj == pos - 1;
                if (g.has_edge(flat[j], v) != want_edge) ok = false;
            }
            if (!ok) continue;
            flat.push_back(v);
            if (rec(idx + 1)) return true;
            flat.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

}  // namespace testutil
