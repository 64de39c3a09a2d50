#include "tvlab/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "tvlab/oracle.hpp"

namespace tvlab::pattern {

LinearForestPattern::LinearForestPattern(std::vector<int> p) : paths(std::move(p)) {
    for (int k : paths)
        if (k < 1) throw std::invalid_argument("path order must be positive");
    std::sort(paths.begin(), paths.end(), std::greater<int>());
}

int LinearForestPattern::total_order() const {
    int t = 0;
    for (int k : paths) t += k;
    return t;
}

LinearForestPattern parse_pattern(const std::string& text) {
    std::vector<int> paths;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto read_int = [&]() -> long {
        size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == start) throw std::invalid_argument("pattern: expected a number in '" + text + "'");
        return std::stol(text.substr(start, i - start));
    };
    while (true) {
        skip_ws();
        long mult = 1;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) mult = read_int();
        if (i >= text.size() || (text[i] != 'P' && text[i] != 'p'))
            throw std::invalid_argument("pattern: expected 'P' in '" + text + "'");
        ++i;
        long k = read_int();
        if (mult < 1 || k < 1 || mult > 64 || k > 64)
            throw std::invalid_argument("pattern: term out of range in '" + text + "'");
        for (long c = 0; c < mult; ++c) paths.push_back(int(k));
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw std::invalid_argument("pattern: expected '+' in '" + text + "'");
        ++i;
    }
    if (paths.empty()) throw std::invalid_argument("pattern: empty");
    return LinearForestPattern(paths);
}

std::string to_string(const LinearForestPattern& p) {
    // conventional ascending notation, e.g. "2P1+P3"
    std::vector<int> asc(p.paths.rbegin(), p.paths.rend());
    std::string out;
    size_t i = 0;
    while (i < asc.size()) {
        size_t j = i;
        while (j < asc.size() && asc[j] == asc[i]) ++j;
        if (!out.empty()) out += "+";
        size_t mult = j - i;
        if (mult > 1) out += std::to_string(mult);
        out += "P" + std::to_string(asc[i]);
        i = j;
    }
    return out;
}

std::vector<int> InducedCopy::all_vertices() const {
    std::vector<int> v;
    for (auto& a : assignment) v.insert(v.end(), a.begin(), a.end());
    std::sort(v.begin(), v.end());
    return v;
}

bool is_valid_copy(const Graph& g, const LinearForestPattern& h, const InducedCopy& copy) {
    if (copy.assignment.size() != h.paths.size()) return false;
    std::vector<int> all;
    for (size_t p = 0; p < h.paths.size(); ++p) {
        const auto& seq = copy.assignment[p];
        if (int(seq.size()) != h.paths[p]) return false;
        for (size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] < 0 || seq[i] >= g.vertex_count()) return false;
            for (size_t j = i + 1; j < seq.size(); ++j) {
                bool adj = g.has_edge(seq[i], seq[j]);
                if (j == i + 1 ? !adj : adj) return false;
            }
        }
        all.insert(all.end(), seq.begin(), seq.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    // anti-completeness across paths
    for (size_t p = 0; p < h.paths.size(); ++p)
        for (size_t q = p + 1; q < h.paths.size(); ++q)
            for (int u : copy.assignment[p])
                for (int v : copy.assignment[q])
                    if (g.has_edge(u, v)) return false;
    return true;
}

namespace {

struct Searcher {
    const Graph& g;
    const std::vector<int>& paths;  // descending
    int n;
    std::vector<std::vector<int>> chosen;
    Bitset blocked;  // closed neighborhood of all committed vertices

    Searcher(const Graph& gg, const std::vector<int>& p)
        : g(gg), paths(p), n(gg.vertex_count()), blocked(gg.vertex_count()) {}

    bool place(size_t pi) {
        if (pi == paths.size()) return true;
        int k = paths[pi];
        if (k == 1) return place_isolated_tail(pi);
        int min_start = 0;
        if (pi > 0 && paths[pi - 1] == k) min_start = chosen[pi - 1][0] + 1;
        Bitset allowed = blocked.complement_set();
        std::vector<int> seq;
        Bitset excl(n);  // N[seq[0..len-2]]
        for (int v0 = allowed.first(); v0 != -1; v0 = allowed.next(v0)) {
            if (v0 < min_start) continue;
            seq.assign(1, v0);
            if (extend(pi, seq, allowed, excl)) return true;
        }
        return false;
    }

    bool extend(size_t pi, std::vector<int>& seq, const Bitset& allowed, Bitset excl) {
        int k = paths[pi];
        if (int(seq.size()) == k) {
            if (seq.front() > seq.back()) return false;  // canonical orientation
            return commit(pi, seq);
        }
        int last = seq.back();
        Bitset cand = g.neighbor_bits(last);
        cand &= allowed;
        cand.andnot_assign(excl);
        bool final_pos = int(seq.size()) == k - 1;
        Bitset excl2 = excl;
        excl2 |= g.neighbor_bits(last);
        excl2.set(last);
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            if (final_pos && v < seq.front()) continue;  // cannot end below the start
            seq.push_back(v);
            if (extend(pi, seq, allowed, excl2)) return true;
            seq.pop_back();
        }
        return false;
    }

    bool commit(size_t pi, const std::vector<int>& seq) {
        chosen.push_back(seq);
        Bitset saved = blocked;
        for (int v : seq) {
            blocked |= g.neighbor_bits(v);
            blocked.set(v);
        }
        if (place(pi + 1)) return true;
        blocked = saved;
        chosen.pop_back();
        return false;
    }

    // All remaining paths are P1 (descending order): pick the
    // lexicographically least independent set of that size, exactly.
    bool place_isolated_tail(size_t pi) {
        int need = int(paths.size() - pi);
        Bitset pool = blocked.complement_set();
        if (!oracle::mis_at_least(g, pool, need)) return false;
        Bitset cur = pool;
        int from = -1;
        for (int left = need; left > 0; --left) {
            bool picked = false;
            for (int v = cur.next(from); v != -1; v = cur.next(v)) {
                Bitset rest = cur;
                rest.andnot_assign(g.neighbor_bits(v));
                rest.reset(v);
                for (int u = rest.first(); u != -1 && u <= v; u = rest.next(u)) rest.reset(u);
                if (oracle::mis_at_least(g, rest, left - 1)) {
                    chosen.push_back({v});
                    cur = rest;
                    from = v;
                    picked = true;
                    break;
                }
            }
            if (!picked) {
                for (int undo = need - left; undo >= 1; --undo) chosen.pop_back();
                return false;
            }
        }
        return true;
    }
};

}  // namespace

std::optional<InducedCopy> find_induced(const Graph& g, const LinearForestPattern& h) {
    if (h.total_order() > g.vertex_count()) return std::nullopt;
    Searcher s(g, h.paths);
    if (!s.place(0)) return std::nullopt;
    InducedCopy copy;
    copy.assignment = std::move(s.chosen);
    return copy;
}

bool is_hfree(const Graph& g, const LinearForestPattern& h) { return !find_induced(g, h); }

CographCheck is_cograph(const Graph& g) {
    CographCheck out;
    auto p4 = find_induced(g, LinearForestPattern({4}));
    if (p4) {
        out.p4 = p4->assignment[0];
        return out;
    }
    out.is_cograph = true;
    return out;
}

}  // namespace tvlab::pattern
