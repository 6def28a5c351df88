#include "bdom/reductions.hpp"

#include <algorithm>

namespace bdom {

namespace {

// Induced 4-cycles with exactly two boundary edges, split by whether the two
// outside endpoints coincide.
void scan_attached_c4(const SubcubicGraph& g, std::vector<SeparatedC4>& separated,
                      std::vector<SeparatedC4>& doubly) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    VertexSet comp = VertexSet::of({a, b, c, d});
                    int inside = 0;
                    bool deg2 = true;
                    for (int v : comp.to_vector()) {
                        int k = (g.adjacency_row(v) & comp).count();
                        inside += k;
                        deg2 &= k == 2;
                    }
                    if (!deg2 || inside != 8) continue; // need an induced 4-cycle
                    auto bnd = boundary(g, comp);
                    if (bnd.size() != 2) continue;
                    SeparatedC4 s;
                    s.v1 = bnd[0].first;
                    s.u1 = bnd[0].second;
                    s.v2 = bnd[1].first;
                    s.u2 = bnd[1].second;
                    // cyclic order from the smallest vertex via its smaller neighbor
                    int start = a;
                    auto nb = (g.adjacency_row(start) & comp).to_vector();
                    int second = nb[0];
                    int fourth = nb[1];
                    int third = (comp - VertexSet::of({start, second, fourth})).to_vector()[0];
                    s.cycle = {start, second, third, fourth};
                    (s.u1 == s.u2 ? doubly : separated).push_back(s);
                }
}

} // namespace

std::vector<SeparatedC4> find_separated_c4(const SubcubicGraph& g) {
    std::vector<SeparatedC4> separated, doubly;
    scan_attached_c4(g, separated, doubly);
    return separated;
}

std::vector<SeparatedC4> find_doubly_attached_c4(const SubcubicGraph& g) {
    std::vector<SeparatedC4> separated, doubly;
    scan_attached_c4(g, separated, doubly);
    return doubly;
}

ContractionResult contract_c4(const SubcubicGraph& g, const SeparatedC4& s) {
    VertexSet comp = VertexSet::of({s.cycle[0], s.cycle[1], s.cycle[2], s.cycle[3]});
    if (comp.count() != 4 || !g.has_edge(s.v1, s.u1) || !g.has_edge(s.v2, s.u2) ||
        !comp.contains(s.v1) || !comp.contains(s.v2) || comp.contains(s.u1) ||
        comp.contains(s.u2) || boundary_size(g, comp) != 2)
        fail(errc::invalid_argument, "contract_c4: not a 4-cycle with boundary two edges");
    if (s.u1 == s.u2)
        fail(errc::single_attachment_unsupported,
             "both boundary edges attach to vertex " + std::to_string(s.u1));

    ContractionResult out;
    Subgraph rest = delete_vertices(g, comp);
    out.w = rest.graph.vertex_count();
    out.to_parent = rest.to_parent;
    out.to_parent.push_back(-1);
    std::array<int, SubcubicGraph::max_vertices> to_child{};
    to_child.fill(-1);
    for (size_t i = 0; i < rest.to_parent.size(); ++i) to_child[rest.to_parent[i]] = int(i);
    auto edges = rest.graph.edges();
    edges.push_back({std::min(to_child[s.u1], out.w), std::max(to_child[s.u1], out.w)});
    edges.push_back({std::min(to_child[s.u2], out.w), std::max(to_child[s.u2], out.w)});
    out.contracted = SubcubicGraph::build(out.w + 1, edges);
    out.omega_before = omega(g);
    out.omega_after = omega(out.contracted);
    out.delta_condition =
        classify_bad_components(g).b() == 0 && classify_bad_components(out.contracted).b() == 0;
    return out;
}

Broadcast lift_broadcast(const SubcubicGraph& g, const ContractionResult& cr,
                         const SeparatedC4& s, const Broadcast& f) {
    if (!(f.graph() == cr.contracted))
        fail(errc::invalid_argument, "lift_broadcast: broadcast not on the contracted graph");
    if (!f.dominates()) fail(errc::invalid_argument, "lift_broadcast: broadcast not dominating");
    if (f.value(cr.w) == 2)
        fail(errc::invalid_argument, "lift_broadcast: value 2 at the contraction vertex; "
                                     "normalize it away first");

    Broadcast base(g);
    for (int z = 0; z < cr.contracted.vertex_count(); ++z)
        if (z != cr.w && f.value(z) > 0) base.set(cr.to_parent[z], f.value(z));

    auto finish = [&](int vstar, int value) {
        Broadcast out = base;
        out.set(vstar, value);
        return out;
    };

    int vstar = -1;
    if (f.value(cr.w) == 1) {
        // a cycle vertex reaching both attachment points at distance <= 2
        for (int c : s.cycle) {
            auto d1 = distance(g, c, s.u1);
            auto d2 = distance(g, c, s.u2);
            if (d1 && *d1 <= 2 && d2 && *d2 <= 2 && (vstar < 0 || c < vstar)) vstar = c;
        }
        if (vstar >= 0) {
            Broadcast out = finish(vstar, 2);
            if (out.dominates()) return out;
        }
    } else {
        VertexSet unheard = g.vertices() - base.covered_set();
        struct Side { int u, v, other_u, other_v; };
        for (const Side& side : {Side{s.u1, s.v1, s.u2, s.v2}, Side{s.u2, s.v2, s.u1, s.v1}}) {
            if (unheard.contains(side.u) || unheard.contains(side.v)) continue;
            if (!unheard.contains(side.other_u)) {
                // everything off the cycle is heard: the corner opposite v1
                // reaches the rest of the cycle
                for (int c : s.cycle)
                    if (c != side.v && !g.has_edge(c, side.v) && (vstar < 0 || c < vstar))
                        vstar = c;
            } else {
                vstar = side.other_v;
            }
            if (vstar >= 0) {
                Broadcast out = finish(vstar, 1);
                if (out.dominates()) return out;
                vstar = -1;
            }
        }
    }

    // rule choice failed; sweep the cycle before giving up
    for (int c : s.cycle) {
        Broadcast out = finish(c, f.value(cr.w) + 1);
        if (out.dominates()) return out;
    }
    fail(errc::lift_failed, "no single cycle vertex completes the broadcast");
}

EdgeDeletionDelta edge_deletion_weight_delta(const SubcubicGraph& g, int u, int v) {
    SubcubicGraph h = delete_edge(g, u, v);
    EdgeDeletionDelta out;
    out.delta = omega(h) - omega(g);
    out.plus_two_condition = g.degree(u) >= 2 && g.degree(v) >= 2 &&
                             classify_bad_components(g).b() == 0 &&
                             classify_bad_components(h).b() == 0;
    return out;
}

} // namespace bdom
