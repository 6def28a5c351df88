#include "bdom/graph.hpp"

#include <algorithm>

namespace bdom {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "invalid_argument";
        case errc::degree_exceeded: return "degree_exceeded";
        case errc::loop_edge: return "loop_edge";
        case errc::duplicate_edge: return "duplicate_edge";
        case errc::size_limit_exceeded: return "size_limit_exceeded";
        case errc::unknown_name: return "unknown_name";
        case errc::not_suppressible: return "not_suppressible";
        case errc::overlapping_domains: return "overlapping_domains";
        case errc::not_dominating_after_normalize: return "not_dominating_after_normalize";
        case errc::single_attachment_unsupported: return "single_attachment_unsupported";
        case errc::lift_failed: return "lift_failed";
        case errc::not_in_vstar: return "not_in_vstar";
        case errc::not_applicable: return "not_applicable";
        case errc::io_failure: return "io_failure";
        case errc::timeout: return "timeout";
    }
    return "unknown";
}

static void check_vertex_set(const SubcubicGraph& g, VertexSet x, const char* who) {
    if ((x.bits & ~g.vertices().bits) != 0)
        fail(errc::invalid_argument, std::string(who) + ": set contains out-of-range vertices");
}

SubcubicGraph SubcubicGraph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > max_vertices)
        fail(errc::size_limit_exceeded,
             "vertex count " + std::to_string(n) + " outside [0, 64]");
    SubcubicGraph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::invalid_argument,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            fail(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (g.rows_[u] >> v & 1)
            fail(errc::duplicate_edge,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        g.rows_[u] |= std::uint64_t{1} << v;
        g.rows_[v] |= std::uint64_t{1} << u;
        if (g.degree(u) > 3 || g.degree(v) > 3)
            fail(errc::degree_exceeded,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") pushes a degree past 3");
        ++g.m_;
    }
    return g;
}

std::vector<std::pair<int, int>> SubcubicGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

VertexSet closed_neighborhood(const SubcubicGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail(errc::invalid_argument, "vertex out of range");
    return g.adjacency_row(v) | VertexSet::single(v);
}

VertexSet ball2(const SubcubicGraph& g, int v) {
    VertexSet n1 = closed_neighborhood(g, v);
    VertexSet out = n1;
    for (int u : g.adjacency_row(v).to_vector()) out = out | g.adjacency_row(u);
    return out;
}

std::optional<int> distance(const SubcubicGraph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        fail(errc::invalid_argument, "vertex out of range");
    VertexSet frontier = VertexSet::single(u);
    VertexSet seen = frontier;
    int d = 0;
    while (!frontier.empty()) {
        if (frontier.contains(v)) return d;
        VertexSet next;
        for (int w : frontier.to_vector()) next = next | g.adjacency_row(w);
        frontier = next - seen;
        seen = seen | next;
        ++d;
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> boundary(const SubcubicGraph& g, VertexSet x) {
    check_vertex_set(g, x, "boundary");
    std::vector<std::pair<int, int>> out;
    for (int u : x.to_vector())
        for (int v : (g.adjacency_row(u) - x).to_vector()) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

int boundary_size(const SubcubicGraph& g, VertexSet x) {
    check_vertex_set(g, x, "boundary_size");
    int total = 0;
    for (int u : x.to_vector()) total += (g.adjacency_row(u) - x).count();
    return total;
}

std::vector<VertexSet> components(const SubcubicGraph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        int seed = std::countr_zero(left.bits);
        VertexSet comp = VertexSet::single(seed);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int w : frontier.to_vector()) next = next | g.adjacency_row(w);
            frontier = next - comp;
            comp = comp | next;
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

bool is_connected(const SubcubicGraph& g) { return components(g).size() <= 1; }

bool is_cubic(const SubcubicGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

bool has_triangle(const SubcubicGraph& g) {
    for (auto [u, v] : g.edges())
        if (!(g.adjacency_row(u) & g.adjacency_row(v)).empty()) return true;
    return false;
}

bool is_c4_component(const SubcubicGraph& g, VertexSet component) {
    check_vertex_set(g, component, "is_c4_component");
    if (component.count() != 4) return false;
    for (int v : component.to_vector()) {
        VertexSet row = g.adjacency_row(v);
        if (!row.subset_of(component) || row.count() != 2) return false;
    }
    return true; // 4 vertices, all internal degree 2, no outside edges: a 4-cycle
}

bool is_k4star_component(const SubcubicGraph& g, VertexSet component) {
    check_vertex_set(g, component, "is_k4star_component");
    if (component.count() != 5) return false;
    int two = -1;
    for (int v : component.to_vector()) {
        VertexSet row = g.adjacency_row(v);
        if (!row.subset_of(component)) return false;
        if (row.count() == 2) {
            if (two >= 0) return false;
            two = v;
        } else if (row.count() != 3) {
            return false;
        }
    }
    if (two < 0) return false;
    auto nb = g.adjacency_row(two).to_vector();
    if (g.has_edge(nb[0], nb[1])) return false; // the subdivided edge must stay absent
    // remaining pairs among the four 3-vertices are all edges
    auto rest = (component - VertexSet::single(two)).to_vector();
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j) {
            if (VertexSet::of({rest[i], rest[j]}) == VertexSet::of({nb[0], nb[1]})) continue;
            if (!g.has_edge(rest[i], rest[j])) return false;
        }
    return true;
}

WeightReport classify_bad_components(const SubcubicGraph& g) {
    WeightReport r;
    for (int v = 0; v < g.vertex_count(); ++v) {
        switch (g.degree(v)) {
            case 0: ++r.n0; break;
            case 1: ++r.n1; break;
            case 2: ++r.n2; break;
            default: ++r.n3; break;
        }
    }
    for (const VertexSet& comp : components(g)) {
        if (is_c4_component(g, comp)) ++r.b1;
        else if (is_k4star_component(g, comp)) ++r.b2;
    }
    return r;
}

int omega(const SubcubicGraph& g) { return classify_bad_components(g).omega(); }

int vertex_weight(const SubcubicGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail(errc::invalid_argument, "vertex out of range");
    int d = g.degree(v);
    return d == 0 ? 9 : 6 - d;
}

int set_weight(const SubcubicGraph& g, VertexSet x) {
    check_vertex_set(g, x, "set_weight");
    int total = 0;
    for (int v : x.to_vector()) total += vertex_weight(g, v);
    return total;
}

VertexSet closure(const SubcubicGraph& g, VertexSet x) {
    check_vertex_set(g, x, "closure");
    VertexSet rest = g.vertices() - x;
    Subgraph h = induced_subgraph(g, rest);
    VertexSet out = x;
    for (const VertexSet& comp : components(h.graph)) {
        bool absorb = comp.count() == 1
            ? h.graph.degree(comp.to_vector()[0]) == 0
            : is_c4_component(h.graph, comp);
        if (absorb)
            for (int v : comp.to_vector()) out.add(h.to_parent[v]);
    }
    return out;
}

Subgraph induced_subgraph(const SubcubicGraph& g, VertexSet keep) {
    check_vertex_set(g, keep, "induced_subgraph");
    Subgraph out;
    out.to_parent = keep.to_vector();
    std::array<int, SubcubicGraph::max_vertices> to_child{};
    to_child.fill(-1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v)) edges.push_back({to_child[u], to_child[v]});
    out.graph = SubcubicGraph::build(int(out.to_parent.size()), edges);
    return out;
}

Subgraph delete_vertices(const SubcubicGraph& g, VertexSet drop) {
    check_vertex_set(g, drop, "delete_vertices");
    return induced_subgraph(g, g.vertices() - drop);
}

SubcubicGraph delete_edge(const SubcubicGraph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        fail(errc::invalid_argument, "delete_edge: no such edge");
    auto edges = g.edges();
    std::erase(edges, std::pair<int, int>{std::min(u, v), std::max(u, v)});
    return SubcubicGraph::build(g.vertex_count(), edges);
}

SubcubicGraph disjoint_union(const SubcubicGraph& g1, const SubcubicGraph& g2) {
    int n = g1.vertex_count() + g2.vertex_count();
    auto edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.push_back({u + g1.vertex_count(), v + g1.vertex_count()});
    return SubcubicGraph::build(n, edges);
}

SubcubicGraph SuppressedGraph::simple() const {
    if (!is_simple)
        fail(errc::not_suppressible, "suppressed graph has parallel edges");
    return SubcubicGraph::build(vertex_count, edges);
}

SuppressedGraph suppress_degree2(const SubcubicGraph& g) {
    if (!is_connected(g)) fail(errc::invalid_argument, "suppress_degree2: graph must be connected");
    bool any3 = false;
    for (int v = 0; v < g.vertex_count(); ++v) any3 |= g.degree(v) == 3;
    if (!any3) fail(errc::invalid_argument, "suppress_degree2: need at least one 3-vertex");

    SuppressedGraph out;
    std::array<int, SubcubicGraph::max_vertices> to_child{};
    to_child.fill(-1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) {
            to_child[v] = out.vertex_count++;
            out.to_parent.push_back(v);
        }

    // Walk each chain of 2-vertices from a kept endpoint; every chain is seen
    // from both ends, so keep the traversal whose start < end (or start == end
    // by edge id for symmetric shapes).
    for (int a : out.to_parent) {
        for (int first : g.neighbors(a)) {
            int prev = a, cur = first;
            while (g.degree(cur) == 2) {
                auto nb = g.neighbors(cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            // chain a .. cur (possibly a-cur directly when first is kept)
            if (cur == a && g.degree(first) == 2)
                fail(errc::not_suppressible, "smoothing a 2-chain from vertex " +
                                                 std::to_string(a) + " back to itself makes a loop");
            // Every chain is walked once from each endpoint; keep the walk
            // that starts at the smaller one.  (a == cur was rejected above.)
            if (a < cur) out.edges.push_back({to_child[a], to_child[cur]});
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.is_simple = std::adjacent_find(out.edges.begin(), out.edges.end()) == out.edges.end();
    return out;
}

} // namespace bdom
