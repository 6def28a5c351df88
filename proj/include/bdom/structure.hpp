#pragma once

#include <array>
#include <vector>

#include "bdom/graph.hpp"
#include "bdom/solver.hpp"

namespace bdom {

// Local statistics around one vertex.  B is the strict second neighborhood
// N_2[v] \ N[v]; p/beta tallies count by exact degree, so vertices of degree
// 0 or 1 appear in beta (or the neighbor count) without a p2/p3/beta2/beta3
// slot.  ell counts edges inside B.
struct StructureProfile {
    int vertex = 0;
    int degree = 0;
    int p2 = 0, p3 = 0;
    VertexSet b;
    int beta = 0, beta2 = 0, beta3 = 0;
    int ell = 0;
    bool on_triangle = false;
    bool in_vt = false;        // degree 3, not on a triangle
    bool in_vstar = false;     // in_vt and beta <= 5
    bool in_vstarstar = false; // in_vstar with a degree-2 neighbor
};

StructureProfile profile(const SubcubicGraph& g, int v);

// Statistics of G - x: 4-cycle components (a, split by boundary size 3/4)
// and isolated vertices (i, split by degree in G).  a3+a4 may undercount a
// and i2+i3 may undercount i on arbitrary inputs; refinement_exact reports
// whether the splits are exhaustive (true whenever every 4-cycle component
// has cut size 3 or 4 and every isolated vertex has degree 2 or 3).
struct SetProfile {
    VertexSet x;
    int boundary_size = 0;
    int a = 0, a3 = 0, a4 = 0;
    int i = 0, i2 = 0, i3 = 0;
    VertexSet closed; // closure(g, x)
    bool refinement_exact = false;
};

SetProfile set_profile(const SubcubicGraph& g, VertexSet x);

// The three local configurations that can arise around a vertex of V* in a
// connected subcubic graph with no bad components and minimum degree two
// near v, keyed by (r, a, i) with side conditions, plus `other` for graphs
// outside that setting.
enum class QTag { q301, q402, q410, other };

const char* qtag_name(QTag t);

struct QCaseRow {
    QTag tag;
    int r, a, i;
    int beta2_plus_ell_max;
    int i2_required;   // -1 when unconstrained
    int beta_required; // -1 when unconstrained
    int beta2_max;     // 99 when unconstrained
};

// Data table of the admissible rows; tests iterate it.
const std::array<QCaseRow, 3>& qcase_table();

struct QCase {
    int r = 0; // exact broadcast number of G[closure(N_2[v])]
    int a = 0, i = 0;
    QTag matched = QTag::other;
    StructureProfile vertex_profile;
    SetProfile ball_profile;
};

// Pre: v in V* (errc::not_in_vstar otherwise).
QCase classify_case(const SubcubicGraph& g, int v);

// |boundary(N_2[v])| = 2*beta2 + 3*beta3 - (3 + p3 + 2*ell).  The identity
// needs deg(v) = 3, v not on a triangle, and minimum degree 2 across
// N(v) and B(v); check_boundary_identity raises errc::not_applicable outside
// that gate.
bool boundary_identity_applicable(const SubcubicGraph& g, int v);
bool check_boundary_identity(const SubcubicGraph& g, int v);

struct IdentityReport {
    bool hypotheses_met = false;
    bool holds = false; // lhs == rhs, reported even when hypotheses fail
    long long lhs = 0, rhs = 0;
};

// |boundary(X)| + 3*n0(G-X)  ==  omega(G-X) - 2*b1(G-X) + omega_G(X) - omega(G).
// Hypotheses: b(G) = 0, b2(G-X) = 0, and no vertex outside X is isolated in G.
IdentityReport equation1_identity(const SubcubicGraph& g, VertexSet x);

// omega_G(C(X)) - |boundary(C(X))| == 16a + 6i + 2*(beta2 + ell) + 18 for
// X = N_2[v].  Hypotheses: v in V^t, min degree 2 over N(v) and B(v), every
// 4-cycle component of G-X has boundary size 3 or 4, every isolated vertex
// of G-X has degree 2 or 3.
IdentityReport closure_weight_identity(const SubcubicGraph& g, int v);

// The inequality chain around X = N_2[v].  Each line reports its own
// hypothesis gate; `holds` is informational when the gate fails.
struct ChainLine {
    const char* name;
    bool hypotheses_met = false;
    bool holds = false;
    long long lhs = 0, rhs = 0;
};

struct ChainReport {
    int vertex = 0;
    std::vector<ChainLine> lines;
    bool all_hold_under_hypotheses() const;
};

ChainReport check_chain_inequalities(const SubcubicGraph& g, int v);

} // namespace bdom
