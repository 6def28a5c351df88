#include "bdom/structure.hpp"

#include <algorithm>

namespace bdom {

namespace {

// Shared scan of G - x: which components are 4-cycles, which vertices sit
// alone, boundary sizes and G-degrees for each.
struct Complement {
    std::vector<VertexSet> c4_components; // in parent numbering
    std::vector<int> c4_boundary_sizes;
    std::vector<int> isolated;            // parent vertex ids
};

Complement scan_complement(const SubcubicGraph& g, VertexSet x) {
    Complement out;
    Subgraph rest = induced_subgraph(g, g.vertices() - x);
    for (const VertexSet& comp : components(rest.graph)) {
        if (comp.count() == 1) {
            int child = comp.to_vector()[0];
            if (rest.graph.degree(child) == 0) out.isolated.push_back(rest.to_parent[child]);
        } else if (is_c4_component(rest.graph, comp)) {
            VertexSet parent_comp;
            for (int child : comp.to_vector()) parent_comp.add(rest.to_parent[child]);
            out.c4_components.push_back(parent_comp);
            out.c4_boundary_sizes.push_back(boundary_size(g, parent_comp));
        }
    }
    return out;
}

bool degrees_two_or_three(const SubcubicGraph& g, VertexSet s) {
    for (int v : s.to_vector())
        if (g.degree(v) < 2) return false;
    return true;
}

} // namespace

const char* qtag_name(QTag t) {
    switch (t) {
        case QTag::q301: return "Q_{3,0,1}";
        case QTag::q402: return "Q_{4,0,2}";
        case QTag::q410: return "Q_{4,1,0}";
        case QTag::other: return "other";
    }
    return "other";
}

StructureProfile profile(const SubcubicGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail(errc::invalid_argument, "vertex out of range");
    StructureProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    auto nbrs = g.neighbors(v);
    for (int u : nbrs) {
        if (g.degree(u) == 2) ++p.p2;
        if (g.degree(u) == 3) ++p.p3;
    }
    p.b = ball2(g, v) - closed_neighborhood(g, v);
    p.beta = p.b.count();
    for (int u : p.b.to_vector()) {
        if (g.degree(u) == 2) ++p.beta2;
        if (g.degree(u) == 3) ++p.beta3;
    }
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) p.on_triangle = true;
    for (int u : p.b.to_vector()) p.ell += (g.adjacency_row(u) & p.b).count();
    p.ell /= 2;
    p.in_vt = p.degree == 3 && !p.on_triangle;
    p.in_vstar = p.in_vt && p.beta <= 5;
    p.in_vstarstar = p.in_vstar && p.p2 >= 1;
    return p;
}

SetProfile set_profile(const SubcubicGraph& g, VertexSet x) {
    SetProfile sp;
    sp.x = x;
    sp.boundary_size = boundary_size(g, x);
    Complement c = scan_complement(g, x);
    sp.a = int(c.c4_components.size());
    for (int b : c.c4_boundary_sizes) {
        if (b == 3) ++sp.a3;
        if (b == 4) ++sp.a4;
    }
    sp.i = int(c.isolated.size());
    for (int w : c.isolated) {
        if (g.degree(w) == 2) ++sp.i2;
        if (g.degree(w) == 3) ++sp.i3;
    }
    sp.closed = closure(g, x);
    sp.refinement_exact = sp.a == sp.a3 + sp.a4 && sp.i == sp.i2 + sp.i3;
    return sp;
}

const std::array<QCaseRow, 3>& qcase_table() {
    static const std::array<QCaseRow, 3> table{{
        // tag          r  a  i  b2+ell  i2  beta  b2max
        {QTag::q301, 3, 0, 1, 1, -1, -1, 99},
        {QTag::q402, 4, 0, 2, 2, 2, 5, 1},
        {QTag::q410, 4, 1, 0, 0, -1, -1, 99},
    }};
    return table;
}

QCase classify_case(const SubcubicGraph& g, int v) {
    QCase q;
    q.vertex_profile = profile(g, v);
    if (!q.vertex_profile.in_vstar)
        fail(errc::not_in_vstar, "vertex " + std::to_string(v) +
                                     " is not a triangle-free 3-vertex with beta <= 5");
    q.ball_profile = set_profile(g, ball2(g, v));
    q.a = q.ball_profile.a;
    q.i = q.ball_profile.i;
    q.r = gamma_exact(induced_subgraph(g, q.ball_profile.closed).graph).gamma;
    const StructureProfile& p = q.vertex_profile;
    for (const QCaseRow& row : qcase_table()) {
        if (row.r != q.r || row.a != q.a || row.i != q.i) continue;
        if (p.beta2 + p.ell > row.beta2_plus_ell_max) continue;
        if (row.i2_required >= 0 && q.ball_profile.i2 != row.i2_required) continue;
        if (row.beta_required >= 0 && p.beta != row.beta_required) continue;
        if (p.beta2 > row.beta2_max) continue;
        q.matched = row.tag;
        break;
    }
    return q;
}

bool boundary_identity_applicable(const SubcubicGraph& g, int v) {
    StructureProfile p = profile(g, v);
    if (!p.in_vt) return false;
    return degrees_two_or_three(g, g.adjacency_row(v) | p.b);
}

bool check_boundary_identity(const SubcubicGraph& g, int v) {
    if (!boundary_identity_applicable(g, v))
        fail(errc::not_applicable,
             "identity needs a triangle-free 3-vertex with min degree 2 nearby");
    StructureProfile p = profile(g, v);
    int lhs = boundary_size(g, ball2(g, v));
    int rhs = 2 * p.beta2 + 3 * p.beta3 - (3 + p.p3 + 2 * p.ell);
    return lhs == rhs;
}

IdentityReport equation1_identity(const SubcubicGraph& g, VertexSet x) {
    IdentityReport rep;
    Subgraph rest = delete_vertices(g, x);
    WeightReport whole = classify_bad_components(g);
    WeightReport outside = classify_bad_components(rest.graph);

    bool no_preexisting_isolated = true;
    for (int v : (g.vertices() - x).to_vector())
        if (g.degree(v) == 0) no_preexisting_isolated = false;
    rep.hypotheses_met = whole.b() == 0 && outside.b2 == 0 && no_preexisting_isolated;

    rep.lhs = boundary_size(g, x) + 3 * outside.n0;
    rep.rhs = outside.omega() - 2 * outside.b1 + set_weight(g, x) - whole.omega();
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

IdentityReport closure_weight_identity(const SubcubicGraph& g, int v) {
    IdentityReport rep;
    StructureProfile p = profile(g, v);
    VertexSet x = ball2(g, v);
    Complement c = scan_complement(g, x);

    bool gate = p.in_vt && degrees_two_or_three(g, g.adjacency_row(v) | p.b);
    for (int b : c.c4_boundary_sizes) gate = gate && (b == 3 || b == 4);
    for (int w : c.isolated) gate = gate && (g.degree(w) == 2 || g.degree(w) == 3);
    rep.hypotheses_met = gate;

    VertexSet closed = closure(g, x);
    int a = int(c.c4_components.size());
    int i = int(c.isolated.size());
    rep.lhs = set_weight(g, closed) - boundary_size(g, closed);
    rep.rhs = 16 * a + 6 * i + 2 * (p.beta2 + p.ell) + 18;
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

bool ChainReport::all_hold_under_hypotheses() const {
    for (const ChainLine& l : lines)
        if (l.hypotheses_met && !l.holds) return false;
    return true;
}

ChainReport check_chain_inequalities(const SubcubicGraph& g, int v) {
    ChainReport rep;
    rep.vertex = v;
    StructureProfile p = profile(g, v);
    VertexSet x = ball2(g, v);
    SetProfile sp = set_profile(g, x);
    Complement c = scan_complement(g, x);
    int r = gamma_exact(induced_subgraph(g, sp.closed).graph).gamma;

    long long refined = 3 * sp.a3 + 4 * sp.a4 + 2 * sp.i2 + 3 * sp.i3;
    rep.lines.push_back({"3a+2i <= 3a3+4a4+2i2+3i3", sp.refinement_exact,
                         3 * sp.a + 2 * sp.i <= refined, 3 * sp.a + 2 * sp.i, refined});
    rep.lines.push_back({"3a3+4a4+2i2+3i3 <= |dX|", true, refined <= sp.boundary_size, refined,
                         sp.boundary_size});
    long long cap = 2 * p.beta - p.beta2 - 2 * p.ell;
    rep.lines.push_back({"|dX| <= 2beta-beta2-2ell", boundary_identity_applicable(g, v),
                         sp.boundary_size <= cap, sp.boundary_size, cap});
    rep.lines.push_back({"r <= 2a+i+2", true, r <= 2 * sp.a + sp.i + 2, r, 2 * sp.a + sp.i + 2});

    bool fact_gate = p.degree == 3 && p.p2 + p.p3 == 3 && p.p3 >= 1;
    for (int b : c.c4_boundary_sizes) fact_gate = fact_gate && (b == 3 || b == 4);
    for (int w : c.isolated) fact_gate = fact_gate && (g.degree(w) == 2 || g.degree(w) == 3);
    rep.lines.push_back(
        {"r <= a3+p3+3", fact_gate, r <= sp.a3 + p.p3 + 3, r, sp.a3 + p.p3 + 3});
    return rep;
}

} // namespace bdom
