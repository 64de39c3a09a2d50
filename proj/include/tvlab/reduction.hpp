#pragma once

#include <string>
#include <vector>

#include "tvlab/graph.hpp"
#include "tvlab/oracle.hpp"

namespace tvlab::reduction {

struct VcInstance {
    Graph g;
    int k = 0;
};

enum class Role { A, B, C, X, Y, D };

struct RoleInfo {
    Role role;
    int i = 0;   // 1-based, following the usual v_1..v_n indexing
    int j = -1;  // second index for D vertices
};

// The hardness instance: 5n+m vertices. Vertex numbering is fixed:
// a_1..a_n, b_1..b_n, c_1..c_n, x_1..x_n, y_1..y_n, then d_{i,j} in
// lexicographic order of the source edges (i < j).
struct OctInstance {
    Graph gstar;
    std::vector<RoleInfo> roles;
    int budget = 0;  // n + k
    VcInstance origin;

    int a(int i) const { return i - 1; }
    int b(int i) const { return origin.g.vertex_count() + i - 1; }
    int c(int i) const { return 2 * origin.g.vertex_count() + i - 1; }
    int x(int i) const { return 3 * origin.g.vertex_count() + i - 1; }
    int y(int i) const { return 4 * origin.g.vertex_count() + i - 1; }
};

OctInstance build_reduction(const VcInstance& inst);

// Forward direction: a vertex cover Q yields the connected odd cycle
// transversal {x_i,y_i : v_i in Q} + {b_i : v_i not in Q} of size n + |Q|.
VertexSet vc_to_coct(const OctInstance& inst, const VertexSet& q);

// Backward direction: any odd cycle transversal of G* (connectivity not
// required) is normalized gadget by gadget and induces a vertex cover of
// size at most |s| - n.
VertexSet coct_to_vc(const OctInstance& inst, const VertexSet& s);

// True iff G* is both P6-free and (P2+P5)-free.
bool certify_class(const OctInstance& inst);

struct EquivalenceReport {
    int n = 0, m = 0;
    int min_vc = 0;
    int min_oct_gstar = 0;
    bool identity_holds = false;  // min_oct_gstar == n + min_vc
    bool witness_valid = false;   // vc_to_coct of the chosen cover validates, connected
    int min_coct_gstar = 0;       // certified by the sandwich argument when it closes
    bool sandwich_holds = false;  // min_oct <= min_coct <= n + min_vc
    // Edgeless inputs with n >= 2 only admit the empty cover at the optimum;
    // its witness {b_1..b_n} is an odd cycle transversal but not connected
    // (B is independent), so the sandwich is run with the cover {v_1} and
    // only bounds min_coct_gstar from above by n + 1.
    bool degenerate_cover = false;
};

// Exercises the equivalence on one instance; throws std::invalid_argument
// when |V(G*)| exceeds size_limit (the oracle budget guard).
EquivalenceReport equivalence_check(const OctInstance& inst, int size_limit = 120);

// Companion role file, one line per vertex: "<vertex> <role> <i>[,<j>]".
std::string serialize_roles(const OctInstance& inst);

}  // namespace tvlab::reduction
