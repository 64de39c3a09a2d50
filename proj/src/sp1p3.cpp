#include "tvlab/sp1p3.hpp"

#include <algorithm>
#include <stdexcept>

#include "tvlab/cograph.hpp"
#include "tvlab/pattern.hpp"

namespace tvlab::sp1p3 {

using oracle::SubroutineProvider;

int component_size_threshold(int s) {
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    return std::max(3, 2 * s - 1);
}

namespace {

pattern::LinearForestPattern class_pattern(int s) {
    std::vector<int> p(s, 1);
    p.push_back(3);
    return pattern::LinearForestPattern(p);
}

void require_in_class(const Graph& g, int s) {
    auto copy = pattern::find_induced(g, class_pattern(s));
    if (copy) {
        std::string msg = "graph contains an induced " + to_string(class_pattern(s)) + ":";
        for (int v : copy->all_vertices()) msg += " " + std::to_string(v);
        throw oracle::OutOfClassError(msg);
    }
}

// the lemma validators report class violations as precondition errors
void require_in_class_precondition(const Graph& g, int s) {
    if (pattern::find_induced(g, class_pattern(s)))
        throw std::invalid_argument("validator precondition: graph contains an induced " +
                                    to_string(class_pattern(s)));
}

VertexSet lift(const std::vector<int>& to_parent, const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (int v : s) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// Collects candidates on the complement ("largest induced ...") side.
// Every offer is validated before it can become the incumbent; candidates
// violating their step's side conditions are simply dropped.
struct MaxBag {
    const Graph& g;
    bool oct_mode;   // bipartite target instead of forest
    bool good_mode;  // require W-avoidance and connected complement
    Bitset wbits;
    CaseTrace* trace;
    VertexSet best = {};
    bool have = false;

    int floor_size() const { return have ? int(best.size()) : -1; }

    void offer(const char* step, const Bitset& f) {
        if (good_mode && f.intersects(wbits)) return;
        if (oct_mode ? !subset_is_bipartite(g, f) : !subset_is_forest(g, f)) return;
        if (good_mode && !subset_is_connected(g, f.complement_set())) return;
        VertexSet fv = f.to_vector();
        if (!have || fv.size() > best.size() || (fv.size() == best.size() && fv < best)) {
            if (trace) trace->candidates.push_back({step, fv});
            best = std::move(fv);
            have = true;
        }
    }
};

Bitset bits_of(const Graph& g, const VertexSet& s) { return Bitset::of(g.vertex_count(), s); }

bool induces_tree(const Graph& g, const Bitset& b) {
    return subset_is_connected(g, b) && subset_is_forest(g, b);
}

std::vector<Bitset> masked_components(const Graph& g, const Bitset& mask) {
    std::vector<Bitset> comps;
    Bitset todo = mask;
    while (todo.any()) {
        Bitset comp = subset_component_of(g, todo, todo.first());
        todo.andnot_assign(comp);
        comps.push_back(comp);
    }
    return comps;
}

// ------------------------------------------------------------- plain FVS

VertexSet best_forest_plain(const Graph& g, int s, const SubroutineProvider& sub,
                            CaseTrace* trace) {
    if (s == 0) return cograph::max_induced_forest(g).vertices;
    int n = g.vertex_count();
    if (n == 0) return {};
    MaxBag bag{g, false, false, Bitset(n), trace};
    bag.offer("empty", Bitset(n));

    // small-component guess plus recursion on the rest
    int climit = component_size_threshold(s) - 1;
    oracle::for_each_subset(g.vertices(), 1, climit, [&](const VertexSet& t) {
        Bitset tb = bits_of(g, t);
        if (!induces_tree(g, tb)) return true;
        Bitset rest = closed_neighborhood_bits(g, tb).complement_set();
        auto subg = induced_subgraph(g, rest);
        VertexSet frec = best_forest_plain(subg.graph, s - 1, sub, nullptr);
        Bitset cand = tb;
        for (int v : frec) cand.set(subg.to_parent[v]);
        bag.offer("small-component", cand);
        return true;
    });

    // big tree: internal vertices guessed, independent pendant leaves added
    oracle::for_each_subset(g.vertices(), 1, 4 * s, [&](const VertexSet& u) {
        Bitset ub = bits_of(g, u);
        if (!induces_tree(g, ub)) return true;
        Bitset r(n);
        for (int v = 0; v < n; ++v)
            if (!ub.test(v) && g.neighbor_bits(v).count_and(ub) == 1) r.set(v);
        if (int(u.size()) + r.count() <= bag.floor_size()) return true;
        auto subg = induced_subgraph(g, r);
        VertexSet leaves = sub.mis(subg.graph).vertices;
        Bitset cand = ub;
        for (int v : leaves) cand.set(subg.to_parent[v]);
        bag.offer("big-tree", cand);
        return true;
    });
    return bag.best;
}

// ------------------------------------------------------------- plain OCT

VertexSet best_bipartite_plain(const Graph& g, int s, const SubroutineProvider& sub,
                               CaseTrace* trace) {
    if (s == 0) return cograph::max_induced_bipartite(g).vertices;
    int n = g.vertex_count();
    if (n == 0) return {};
    MaxBag bag{g, true, false, Bitset(n), trace};
    bag.offer("empty", Bitset(n));

    // small-component guess plus recursion
    int climit = component_size_threshold(s) - 1;
    oracle::for_each_subset(g.vertices(), 1, climit, [&](const VertexSet& l) {
        Bitset lb = bits_of(g, l);
        if (!subset_is_bipartite(g, lb)) return true;
        Bitset rest = closed_neighborhood_bits(g, lb).complement_set();
        auto subg = induced_subgraph(g, rest);
        VertexSet brec = best_bipartite_plain(subg.graph, s - 1, sub, nullptr);
        Bitset cand = lb;
        for (int v : brec) cand.set(subg.to_parent[v]);
        bag.offer("small-component", cand);
        return true;
    });

    // connected case, stars
    for (int x = 0; x < n; ++x) {
        Bitset nb = g.neighbor_bits(x);
        if (nb.count() + 1 <= bag.floor_size()) continue;
        auto subg = induced_subgraph(g, nb);
        VertexSet ind = sub.mis(subg.graph).vertices;
        Bitset cand(n);
        cand.set(x);
        for (int v : ind) cand.set(subg.to_parent[v]);
        bag.offer("star", cand);
    }

    // connected case, anchored at an edge with side guesses
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x)) {
            if (y < x) continue;
            Bitset pool = g.neighbor_bits(x) | g.neighbor_bits(y);
            pool.set(x);
            pool.set(y);
            pool = pool.complement_set();  // anti-complete to both x and y
            VertexSet poolv = pool.to_vector();
            oracle::for_each_subset(poolv, 0, s - 1, [&](const VertexSet& xp) {
                Bitset xpb = bits_of(g, xp);
                if (!subset_is_independent(g, xpb)) return true;
                VertexSet pool2 = set_difference(poolv, xp);
                oracle::for_each_subset(pool2, 0, s - 1, [&](const VertexSet& yp) {
                    Bitset ypb = bits_of(g, yp);
                    if (!subset_is_independent(g, ypb)) return true;
                    Bitset cx = g.neighbor_bits(y);
                    cx.andnot_assign(g.neighbor_bits(x));
                    for (int a : xp) cx.andnot_assign(g.neighbor_bits(a));
                    cx.reset(x);
                    cx.reset(y);
                    Bitset cy = g.neighbor_bits(x);
                    cy.andnot_assign(g.neighbor_bits(y));
                    for (int a : yp) cy.andnot_assign(g.neighbor_bits(a));
                    cy.reset(x);
                    cy.reset(y);
                    int ub = 2 + int(xp.size() + yp.size()) + cx.count() + cy.count();
                    if (ub <= bag.floor_size()) return true;
                    auto sx = induced_subgraph(g, cx);
                    auto sy = induced_subgraph(g, cy);
                    Bitset cand = xpb | ypb;
                    cand.set(x);
                    cand.set(y);
                    for (int v : sub.mis(sx.graph).vertices) cand.set(sx.to_parent[v]);
                    for (int v : sub.mis(sy.graph).vertices) cand.set(sy.to_parent[v]);
                    bag.offer("edge-anchor", cand);
                    return true;
                });
                return true;
            });
        }
    return bag.best;
}

// ------------------------------------------- shared small-components step

// Guess L (exactly s components, each of at most comp_limit vertices), force
// U = N(L) out, enumerate small connectors R, and strip the leftover cliques
// down to pieces of at most two vertices.
void small_components_step(const Graph& g, const VertexSet& w, int s, int comp_limit,
                           const SubroutineProvider&, MaxBag& bag) {
    Bitset wb = bits_of(g, w);
    VertexSet pool = set_difference(g.vertices(), w);
    int bound = 2 * s * s - 2 * s + 3;
    oracle::for_each_subset(pool, s, s * comp_limit, [&](const VertexSet& l) {
        Bitset lb = bits_of(g, l);
        if (bag.oct_mode ? !subset_is_bipartite(g, lb) : !subset_is_forest(g, lb)) return true;
        auto comps = masked_components(g, lb);
        if (int(comps.size()) != s) return true;
        for (auto& c : comps)
            if (c.count() > comp_limit) return true;
        if (!subset_is_connected(g, lb.complement_set())) return true;  // L itself good

        Bitset ub = open_neighborhood_bits(g, lb);
        bag.offer("small-comps/no-connector", ub.complement_set());

        Bitset pool2b = lb | ub | wb;
        VertexSet pool2 = pool2b.complement_set().to_vector();
        oracle::for_each_subset(pool2, 0, bound, [&](const VertexSet& r) {
            Bitset sb = ub | wb;
            for (int v : r) sb.set(v);
            if (!subset_is_connected(g, sb)) return true;
            Bitset f = sb.complement_set();
            bag.offer("small-comps/connector", f);

            // leftover region decomposes into cliques (anti-complete to L)
            Bitset region = f.andnot(lb);
            if (region.none()) return true;
            auto cliques = masked_components(g, region);
            for (auto& c : cliques)
                if (!subset_is_clique(g, c))
                    throw std::logic_error("leftover region not a union of cliques");
            Bitset keep = lb;
            for (auto& c : cliques) {
                int sz = c.count();
                if (sz <= 2) {
                    keep |= c;
                    continue;
                }
                // keep two vertices, leaving an S-adjacent vertex behind
                int anchor = -1;
                for (int v = c.first(); v != -1; v = c.next(v))
                    if (g.neighbor_bits(v).intersects(sb)) {
                        anchor = v;
                        break;
                    }
                Bitset choices = c;
                if (anchor != -1) choices.reset(anchor);
                int k1 = choices.first();
                int k2 = choices.next(k1);
                keep.set(k1);
                keep.set(k2);
            }
            bag.offer("small-comps/cliques", keep);
            return true;
        });
        return true;
    });
}

// ------------------------------------------------------- CFVS extension

VertexSet best_good_forest(const Graph& g, const VertexSet& w, int s,
                           const SubroutineProvider& sub, CaseTrace* trace) {
    int n = g.vertex_count();
    if (s == 0) {
        auto r = cograph::min_cfvs_extension(g, w, sub);
        if (!r) throw std::logic_error("connected CFVS instance reported infeasible");
        return bits_of(g, r->vertices).complement_set().to_vector();
    }
    MaxBag bag{g, false, true, bits_of(g, w), trace};
    bag.offer("empty", Bitset(n));

    // all tiny forests (at most (s-1)(threshold-1) vertices)
    int tiny = (s - 1) * (component_size_threshold(s) - 1);
    VertexSet pool = set_difference(g.vertices(), w);
    oracle::for_each_subset(pool, 1, tiny, [&](const VertexSet& f0) {
        bag.offer("tiny", bits_of(g, f0));
        return true;
    });

    // big tree with small side pieces
    Bitset wb = bits_of(g, w);
    oracle::for_each_subset(pool, 1, 4 * s, [&](const VertexSet& u) {
        Bitset ubits = bits_of(g, u);
        if (!induces_tree(g, ubits)) return true;
        Bitset upool = closed_neighborhood_bits(g, ubits) | wb;
        VertexSet pool2 = upool.complement_set().to_vector();
        oracle::for_each_subset(pool2, 0, 2 * (s - 1), [&](const VertexSet& up) {
            Bitset upb = bits_of(g, up);
            int edges = subset_edge_count(g, upb);
            int maxdeg = 0;
            for (int v : up) maxdeg = std::max(maxdeg, g.neighbor_bits(v).count_and(upb));
            if (maxdeg > 1 || int(up.size()) - edges > s - 1) return true;
            Bitset rbits(n);
            Bitset blocked = ubits | upb | wb;
            for (int v = 0; v < n; ++v) {
                if (blocked.test(v)) continue;
                if (g.neighbor_bits(v).count_and(ubits) == 1 &&
                    !g.neighbor_bits(v).intersects(upb))
                    rbits.set(v);
            }
            if (int(u.size() + up.size()) + rbits.count() <= bag.floor_size()) return true;
            Bitset keep = ubits | upb;
            keep = keep.complement_set();
            auto subg = induced_subgraph(g, keep);
            VertexSet forced;
            keep.for_each([&](int v) {
                if (!rbits.test(v)) forced.push_back(subg.from_parent[v]);
            });
            std::sort(forced.begin(), forced.end());
            auto r = sub.cvc_ext(subg.graph, forced);
            if (!r) return true;
            Bitset cand = ubits | upb;
            Bitset cover(subg.graph.vertex_count());
            for (int v : r->vertices) cover.set(v);
            for (int v = 0; v < subg.graph.vertex_count(); ++v)
                if (!cover.test(v)) cand.set(subg.to_parent[v]);
            bag.offer("big-tree", cand);
            return true;
        });
        return true;
    });

    small_components_step(g, w, s, component_size_threshold(s) - 1, sub, bag);
    return bag.best;
}

// ------------------------------------------------------- COCT extension

// Given both anchored sides, derive the excluded set U and the two clique
// regions, connect U with a small connector, and harvest one vertex per
// leftover clique. Two subcases: no surviving crossing edge, or a guessed
// crossing edge with its bad cliques resolved explicitly.
void coct_resolve_sides(const Graph& g, const Bitset& wb, int s, int bound, const Bitset& x1,
                        const Bitset& y1, MaxBag& bag) {
    int n = g.vertex_count();
    Bitset sides = x1 | y1;
    Bitset rest = sides.complement_set();
    Bitset ub(n), vx(n), vy(n);
    rest.for_each([&](int v) {
        if (wb.test(v)) {
            ub.set(v);
            return;
        }
        bool ax = g.neighbor_bits(v).intersects(x1);
        bool ay = g.neighbor_bits(v).intersects(y1);
        if (ax && !ay)
            vx.set(v);
        else if (ay && !ax)
            vy.set(v);
        else
            ub.set(v);  // adjacent to both sides, or to neither
    });
    if (ub.any()) {
        Bitset comp = subset_component_of(g, rest, ub.first());
        if (!ub.is_subset_of(comp)) return;
    }

    VertexSet pool = rest.andnot(ub).to_vector();
    oracle::for_each_subset(pool, 0, bound, [&](const VertexSet& r) {
        Bitset u2 = ub;
        for (int v : r) u2.set(v);
        if (!subset_is_connected(g, u2)) return true;
        Bitset vx2 = vx.andnot(u2), vy2 = vy.andnot(u2);
        auto cliquesX = masked_components(g, vx2);
        auto cliquesY = masked_components(g, vy2);
        for (auto& c : cliquesX)
            if (!subset_is_clique(g, c)) throw std::logic_error("V_X region not P3-free");
        for (auto& c : cliquesY)
            if (!subset_is_clique(g, c)) throw std::logic_error("V_Y region not P3-free");

        // no crossing edge outside B: one pick per clique, preferring to
        // leave a U-adjacent vertex behind
        {
            Bitset cand = sides;
            auto pick = [&](const Bitset& c) {
                if (c.count() == 1) return c.first();
                int anchored = -1, anchored_cnt = 0;
                for (int v = c.first(); v != -1; v = c.next(v))
                    if (g.neighbor_bits(v).intersects(u2)) {
                        if (anchored == -1) anchored = v;
                        ++anchored_cnt;
                    }
                if (anchored == -1 || anchored_cnt >= 2) return c.first();
                for (int v = c.first(); v != -1; v = c.next(v))
                    if (v != anchored) return v;
                return c.first();
            };
            for (auto& c : cliquesY) cand.set(pick(c));
            for (auto& c : cliquesX) cand.set(pick(c));
            bag.offer("large-sides/no-cross", cand);
        }

        // crossing edge xy outside B
        for (int x = vx2.first(); x != -1; x = vx2.next(x)) {
            Bitset cross = g.neighbor_bits(x) & vy2;
            for (int y = cross.first(); y != -1; y = cross.next(y)) {
                auto complete_to = [&](const Bitset& c, int t) {
                    Bitset miss = c.andnot(g.neighbor_bits(t));
                    return miss.none();
                };
                struct BadClique {
                    Bitset clique;
                    bool x_side;
                };
                std::vector<BadClique> bads;
                std::vector<Bitset> goodX, goodY;
                int bad_x_count = 0, bad_y_count = 0;
                for (auto& c : cliquesX) {
                    if (complete_to(c, y))
                        goodX.push_back(c);
                    else {
                        bads.push_back({c, true});
                        ++bad_x_count;
                    }
                }
                for (auto& c : cliquesY) {
                    if (complete_to(c, x))
                        goodY.push_back(c);
                    else {
                        bads.push_back({c, false});
                        ++bad_y_count;
                    }
                }
                if (bad_x_count > s - 1 || bad_y_count > s - 1) continue;

                Bitset u3base = u2;
                u3base.set(x);
                u3base.set(y);

                // one kept vertex (or none) per bad clique; x and y stay out
                std::function<void(size_t, const Bitset&, const Bitset&, const Bitset&)> choose =
                    [&](size_t i, const Bitset& x2, const Bitset& y2, const Bitset& u3) {
                        if (i == bads.size()) {
                            Bitset rest2 = (x2 | y2).complement_set();
                            if (u3.any()) {
                                Bitset comp = subset_component_of(g, rest2, u3.first());
                                if (!u3.is_subset_of(comp)) return;
                            }
                            Bitset pool2b = rest2.andnot(u3);
                            VertexSet pool2 = pool2b.to_vector();
                            oracle::for_each_subset(
                                pool2, 0, bound, [&](const VertexSet& r2) {
                                    Bitset u4 = u3;
                                    for (int v : r2) u4.set(v);
                                    if (!subset_is_connected(g, u4)) return true;
                                    Bitset cand = x2 | y2;
                                    for (auto& c : goodX) {
                                        Bitset left = c.andnot(u4);
                                        if (left.any()) cand.set(left.first());
                                    }
                                    for (auto& c : goodY) {
                                        Bitset left = c.andnot(u4);
                                        if (left.any()) cand.set(left.first());
                                    }
                                    bag.offer("large-sides/cross-edge", cand);
                                    return true;
                                });
                            return;
                        }
                        const auto& bc = bads[i];
                        // keep none
                        choose(i + 1, x2, y2, u3 | bc.clique);
                        // keep one vertex in B
                        for (int v = bc.clique.first(); v != -1; v = bc.clique.next(v)) {
                            if (v == x || v == y) continue;
                            Bitset u3b = u3 | bc.clique;
                            u3b.reset(v);
                            Bitset x2b = x2, y2b = y2;
                            if (bc.x_side)
                                y2b.set(v);
                            else
                                x2b.set(v);
                            choose(i + 1, x2b, y2b, u3b);
                        }
                    };
                choose(0, x1, y1, u3base);
            }
        }
        return true;
    });
}

// The bipartition-anchored branch: both sides of the target exceed s.
void coct_large_sides_step(const Graph& g, const VertexSet& w, int s,
                           const SubroutineProvider&, MaxBag& bag) {
    int n = g.vertex_count();
    if (n < 2 * (s + 1)) return;
    Bitset wb = bits_of(g, w);
    VertexSet pool = set_difference(g.vertices(), w);
    int bound = 2 * s * s - 2 * s + 3;

    oracle::for_each_subset(pool, s + 1, s + 1, [&](const VertexSet& xp) {
        Bitset xpb = bits_of(g, xp);
        if (!subset_is_independent(g, xpb)) return true;
        VertexSet pool2 = set_difference(pool, xp);
        oracle::for_each_subset(pool2, s + 1, s + 1, [&](const VertexSet& yp) {
            Bitset ypb = bits_of(g, yp);
            if (!subset_is_independent(g, ypb)) return true;
            auto six = induced_subgraph(g, xpb | ypb);
            if (!pattern::find_induced(six.graph, pattern::LinearForestPattern({3})))
                return true;

            // cheap bound: everything adjacent to both sides is excluded
            Bitset nxp = open_neighborhood_bits(g, xpb);
            Bitset nyp = open_neighborhood_bits(g, ypb);
            Bitset u0 = nxp & nyp;
            u0.andnot_assign(xpb);
            u0.andnot_assign(ypb);
            u0 |= wb;
            if (n - u0.count() <= bag.floor_size()) return true;

            // distribute the non-neighbors of both sides
            Bitset zb = (nxp | nyp | xpb | ypb | wb).complement_set();
            VertexSet zv = zb.to_vector();
            oracle::for_each_subset(zv, 0, s - 1, [&](const VertexSet& zx) {
                Bitset zxb = bits_of(g, zx);
                if (!subset_is_independent(g, zxb)) return true;
                VertexSet zrest = set_difference(zv, zx);
                oracle::for_each_subset(zrest, 0, s - 1, [&](const VertexSet& zy) {
                    Bitset zyb = bits_of(g, zy);
                    if (!subset_is_independent(g, zyb)) return true;
                    Bitset x1 = xpb | zxb, y1 = ypb | zyb;
                    coct_resolve_sides(g, wb, s, bound, x1, y1, bag);
                    return true;
                });
                return true;
            });
            return true;
        });
        return true;
    });
}

VertexSet best_good_bipartite(const Graph& g, const VertexSet& w, int s,
                              const SubroutineProvider& sub, CaseTrace* trace) {
    int n = g.vertex_count();
    if (s == 0) {
        auto r = cograph::min_coct_extension(g, w, sub);
        if (!r) throw std::logic_error("connected COCT instance reported infeasible");
        return bits_of(g, r->vertices).complement_set().to_vector();
    }
    MaxBag bag{g, true, true, bits_of(g, w), trace};
    bag.offer("empty", Bitset(n));

    // one side of size at most s
    VertexSet pool = set_difference(g.vertices(), w);
    oracle::for_each_subset(pool, 0, s, [&](const VertexSet& x) {
        Bitset xb = bits_of(g, x);
        if (!subset_is_independent(g, xb)) return true;
        auto subg = induced_subgraph(g, xb.complement_set());
        VertexSet wl;
        for (int v : w) wl.push_back(subg.from_parent[v]);
        std::sort(wl.begin(), wl.end());
        auto r = sub.cvc_ext(subg.graph, wl);
        if (!r) return true;
        Bitset cand = xb;
        Bitset cover(subg.graph.vertex_count());
        for (int v : r->vertices) cover.set(v);
        for (int v = 0; v < subg.graph.vertex_count(); ++v)
            if (!cover.test(v)) cand.set(subg.to_parent[v]);
        bag.offer("small-side", cand);
        return true;
    });

    small_components_step(g, w, s, 2, sub, bag);
    coct_large_sides_step(g, w, s, sub, bag);
    return bag.best;
}

}  // namespace

// ----------------------------------------------------- lemma validators

bool satisfies_component_structure(const Graph& g, int s) {
    if (!is_bipartite(g).bipartite)
        throw std::invalid_argument("component structure validator: graph not bipartite");
    require_in_class_precondition(g, s);
    int threshold = component_size_threshold(s);
    auto comps = connected_components(g);
    int big = -1;
    for (int i = 0; i < int(comps.size()); ++i)
        if (int(comps[i].size()) >= threshold) {
            big = i;
            break;
        }
    if (big == -1) return true;
    int others = 0;
    for (int i = 0; i < int(comps.size()); ++i) {
        if (i == big) continue;
        ++others;
        if (comps[i].size() > 2) return false;
    }
    return others <= s - 1;
}

bool satisfies_internal_vertex_bound(const Graph& tree, int s) {
    if (tree.vertex_count() == 0 || !subset_is_connected(tree, tree.full_set()) ||
        tree.edge_count() != tree.vertex_count() - 1)
        throw std::invalid_argument("internal vertex validator: input is not a tree");
    require_in_class_precondition(tree, s);
    int internal = 0;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) >= 2) ++internal;
    return internal <= 4 * s;
}

VertexSet connector_set(const Graph& g, const VertexSet& u, int s) {
    int n = g.vertex_count();
    for (int v : u)
        if (v < 0 || v >= n) throw std::invalid_argument("connector_set: vertex out of range");
    if (n > 0 && !subset_is_connected(g, g.full_set()))
        throw std::invalid_argument("connector_set: graph not connected");
    Bitset ub = bits_of(g, u);
    if (subset_is_connected(g, ub)) return {};

    auto p3 = pattern::find_induced(g, pattern::LinearForestPattern({3}));
    if (!p3) throw std::logic_error("P3-free connected graph cannot have disconnected subsets");
    Bitset r(n);
    for (int v : p3->assignment[0]) r.set(v);

    // multi-source BFS from the P3; walk parents back from each component
    std::vector<int> parent(n, -2);
    std::vector<int> queue;
    r.for_each([&](int v) {
        parent[v] = -1;
        queue.push_back(v);
    });
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int y : g.neighbors(x))
            if (parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    for (auto& comp : masked_components(g, ub)) {
        if (comp.intersects(r)) continue;
        // nearest component vertex in BFS order
        int pick = -1;
        for (int v : queue)
            if (comp.test(v)) {
                pick = v;
                break;
            }
        if (pick == -1) throw std::logic_error("connected graph: BFS must reach every vertex");
        for (int x = parent[pick]; x != -1; x = parent[x]) r.set(x);
    }

    // greedy pruning: drop anything not needed for connectivity
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = r.first(); v != -1; v = r.next(v)) {
            Bitset test = r;
            test.reset(v);
            if (subset_is_connected(g, test | ub)) {
                r = test;
                changed = true;
            }
        }
    }
    r.andnot_assign(ub);
    int bound = 2 * s * s - 2 * s + 3;
    if (r.count() > bound)
        throw oracle::OutOfClassError("connector exceeds its size bound; input out of class");
    return r.to_vector();
}

// ------------------------------------------------------------ solvers

oracle::TransversalSolution min_fvs(const Graph& g, int s, const SubroutineProvider& sub,
                                    CaseTrace* trace) {
    require_in_class(g, s);
    VertexSet forest = best_forest_plain(g, s, sub, trace);
    return {SolutionTag::FeedbackVertexSet, bits_of(g, forest).complement_set().to_vector()};
}

oracle::TransversalSolution min_oct(const Graph& g, int s, const SubroutineProvider& sub,
                                    CaseTrace* trace) {
    require_in_class(g, s);
    VertexSet bip = best_bipartite_plain(g, s, sub, trace);
    return {SolutionTag::OddCycleTransversal, bits_of(g, bip).complement_set().to_vector()};
}

std::optional<oracle::TransversalSolution> min_cfvs_extension(const Graph& g, const VertexSet& w,
                                                              int s,
                                                              const SubroutineProvider& sub,
                                                              CaseTrace* trace) {
    require_in_class(g, s);
    auto prep = oracle::prepare_extension_input(
        g, w, [](const Graph& comp) { return is_forest(comp).forest; });
    if (prep.infeasible) return std::nullopt;
    SolutionTag tag = SolutionTag::ConnectedFeedbackVertexSetExt;
    if (prep.trivial) return oracle::TransversalSolution{tag, {}};
    VertexSet forest = best_good_forest(prep.sub, prep.w_sub, s, sub, trace);
    Bitset sb = bits_of(prep.sub, forest).complement_set();
    return oracle::TransversalSolution{tag, lift(prep.to_parent, sb.to_vector())};
}

std::optional<oracle::TransversalSolution> min_coct_extension(const Graph& g, const VertexSet& w,
                                                              int s,
                                                              const SubroutineProvider& sub,
                                                              CaseTrace* trace) {
    require_in_class(g, s);
    auto prep = oracle::prepare_extension_input(
        g, w, [](const Graph& comp) { return is_bipartite(comp).bipartite; });
    if (prep.infeasible) return std::nullopt;
    SolutionTag tag = SolutionTag::ConnectedOddCycleTransversalExt;
    if (prep.trivial) return oracle::TransversalSolution{tag, {}};
    VertexSet bip = best_good_bipartite(prep.sub, prep.w_sub, s, sub, trace);
    Bitset sb = bits_of(prep.sub, bip).complement_set();
    return oracle::TransversalSolution{tag, lift(prep.to_parent, sb.to_vector())};
}

}  // namespace tvlab::sp1p3
