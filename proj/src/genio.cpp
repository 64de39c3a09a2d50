#include "tvlab/genio.hpp"

#include <algorithm>
#include <sstream>

#include "tvlab/pattern.hpp"

namespace tvlab::genio {

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("edgelist: missing header");
    if (n < 0 || m < 0 || m > n * (n - 1) / 2) throw ParseError("edgelist: bad header");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw ParseError("edgelist: truncated edge list");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edgelist: vertex id out of range");
        if (u == v) throw ParseError("edgelist: self-loop");
        if (u > v) throw ParseError("edgelist: edges must satisfy u < v");
        edges.push_back({int(u), int(v)});
    }
    std::string trailing;
    if (in >> trailing) throw ParseError("edgelist: trailing data");
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("edgelist: duplicate edge");
    return Graph::from_edges(int(n), edges);
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

void g6_append_sextets(std::string& out, uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(char(kG6Lo + ((value >> (6 * i)) & 0x3f)));
}

}  // namespace

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(kG6Lo + n));
    } else if (n <= 258047) {
        out.push_back(char(126));
        g6_append_sextets(out, uint64_t(n), 3);
    } else {
        out.push_back(char(126));
        out.push_back(char(126));
        g6_append_sextets(out, uint64_t(n), 6);
    }
    int bits = n * (n - 1) / 2;
    int cur = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(kG6Lo + cur));
                cur = 0;
                filled = 0;
            }
        }
    if (bits % 6) out.push_back(char(kG6Lo + (cur << (6 - bits % 6))));
    return out;
}

Graph parse_graph6(const std::string& raw) {
    std::string text = raw;
    const std::string header = ">>graph6<<";
    if (text.rfind(header, 0) == 0) text = text.substr(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) throw ParseError("graph6: empty input");

    size_t pos = 0;
    auto sextet = [&]() -> int {
        if (pos >= text.size()) throw ParseError("graph6: truncated");
        unsigned char c = text[pos++];
        if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6: byte out of range");
        return c - kG6Lo;
    };

    long long n;
    int first = sextet();
    if (first < 63) {
        n = first;
    } else {
        int second = sextet();
        if (second < 63) {
            n = ((long long)second << 12) | ((long long)sextet() << 6) | sextet();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | sextet();
        }
    }
    if (n > 100000) throw ParseError("graph6: vertex count too large");
    long long bits = n * (n - 1) / 2;
    long long chars = (bits + 5) / 6;
    if ((long long)text.size() - (long long)pos != chars)
        throw ParseError("graph6: length mismatch");

    std::vector<std::pair<int, int>> edges;
    int cur = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                cur = sextet();
                avail = 6;
            }
            if ((cur >> (avail - 1)) & 1) edges.push_back({i, j});
            --avail;
        }
    if (avail > 0 && (cur & ((1 << avail) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits");
    return Graph::from_edges(int(n), edges);
}

uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("labeled_graph_count: n out of range");
    return 1ULL << (n * (n - 1) / 2);
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumerate_all_graphs: n must be <= 8");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    uint64_t total = 1ULL << pairs.size();
    std::vector<std::pair<int, int>> edges;
    for (uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        uint64_t m = mask;
        while (m) {
            edges.push_back(pairs[__builtin_ctzll(m)]);
            m &= m - 1;
        }
        fn(Graph::from_edges(n, edges));
    }
}

Graph random_graph(int n, double density, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.real() < density) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

namespace {

// Random cotree shape with alternating tags and child counts >= 2; leaves get
// a random permutation of the vertex labels.
void cotree_edges(int lo, int hi, bool join, SplitMix64& rng, const std::vector<int>& label,
                  std::vector<std::pair<int, int>>& edges) {
    int size = hi - lo;
    if (size == 1) return;
    int max_children = std::min(size, 4);
    int k = 2 + int(rng.below(uint64_t(max_children - 1)));
    // random composition of `size` into k positive parts
    std::vector<int> cuts;
    std::vector<int> avail;
    for (int c = lo + 1; c < hi; ++c) avail.push_back(c);
    for (int i = 0; i < k - 1; ++i) {
        int idx = int(rng.below(avail.size()));
        cuts.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
    }
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    for (size_t c = 0; c + 1 < cuts.size(); ++c)
        cotree_edges(cuts[c], cuts[c + 1], !join, rng, label, edges);
    if (join)
        for (size_t a = 0; a + 1 < cuts.size(); ++a)
            for (size_t b = a + 1; b + 1 < cuts.size(); ++b)
                for (int u = cuts[a]; u < cuts[a + 1]; ++u)
                    for (int v = cuts[b]; v < cuts[b + 1]; ++v)
                        edges.push_back({std::min(label[u], label[v]), std::max(label[u], label[v])});
}

}  // namespace

Graph random_cograph(int n, SplitMix64& rng) {
    if (n <= 0) return Graph(0);
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(label[i], label[rng.below(uint64_t(i + 1))]);
    std::vector<std::pair<int, int>> edges;
    cotree_edges(0, n, rng.below(2) == 0, rng, label, edges);
    return Graph::from_edges(n, edges);
}

Graph random_in_class(const GeneratorSpec& spec, GenStats* stats) {
    GenStats local;
    GenStats& st = stats ? *stats : local;
    SplitMix64 rng(spec.seed);

    auto certify = [&](const Graph& g) -> bool {
        switch (spec.cls) {
            case GraphClass::Any: return true;
            case GraphClass::Bipartite: return is_bipartite(g).bipartite;
            case GraphClass::Cograph:
                return pattern::is_hfree(g, pattern::LinearForestPattern({4}));
            case GraphClass::Sp1P3Free: {
                std::vector<int> p(spec.s, 1);
                p.push_back(3);
                return pattern::is_hfree(g, pattern::LinearForestPattern(p));
            }
            case GraphClass::Sp1P5Free: {
                std::vector<int> p(spec.s, 1);
                p.push_back(5);
                return pattern::is_hfree(g, pattern::LinearForestPattern(p));
            }
        }
        return false;
    };

    if (spec.cls == GraphClass::Cograph) {
        Graph g = random_cograph(spec.n, rng);
        st.attempts = 1;
        if (!certify(g)) throw std::logic_error("cotree construction produced a P4");
        return g;
    }
    if (spec.cls == GraphClass::Bipartite) {
        std::vector<int> side(spec.n);
        for (int i = 0; i < spec.n; ++i) side[i] = int(rng.below(2));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (side[u] != side[v] && rng.real() < spec.density) edges.push_back({u, v});
        st.attempts = 1;
        Graph g = Graph::from_edges(spec.n, edges);
        if (!certify(g)) throw std::logic_error("two-sided construction produced an odd cycle");
        return g;
    }

    Graph last(spec.n);
    for (int attempt = 0; attempt < std::max(1, spec.max_rejects); ++attempt) {
        ++st.attempts;
        last = random_graph(spec.n, spec.density, rng);
        if (certify(last)) return last;
    }
    if (!spec.allow_repair)
        throw RejectionBudgetError("random_in_class: rejection budget exhausted after " +
                                       std::to_string(st.attempts) + " attempts",
                                   st.attempts);

    // Edge-addition repair: each step destroys the found copy, and edges only
    // grow, so this terminates (the complete graph is in every class here).
    pattern::LinearForestPattern pat =
        spec.cls == GraphClass::Sp1P3Free
            ? pattern::LinearForestPattern([&] {
                  std::vector<int> p(spec.s, 1);
                  p.push_back(3);
                  return p;
              }())
            : pattern::LinearForestPattern([&] {
                  std::vector<int> p(spec.s, 1);
                  p.push_back(5);
                  return p;
              }());
    Graph g = last;
    while (true) {
        auto copy = pattern::find_induced(g, pat);
        if (!copy) break;
        st.repaired = true;
        ++st.repair_edges;
        const auto& long_path = copy->assignment[0];  // descending order: path first
        int a, b;
        if (copy->assignment.size() > 1) {
            // connect an isolated piece to the middle of the path
            a = copy->assignment.back()[0];
            b = long_path[long_path.size() / 2];
        } else {
            a = long_path[0];
            b = long_path[2];  // chord
        }
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) edges.push_back({u, v});
        edges.push_back({std::min(a, b), std::max(a, b)});
        g = Graph::from_edges(g.vertex_count(), edges);
    }
    if (!certify(g)) throw std::logic_error("repair loop failed to certify");
    return g;
}

}  // namespace tvlab::genio
