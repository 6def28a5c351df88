#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdom/error.hpp"

namespace bdom {

// Vertex subset of a graph with at most 64 vertices, stored as a bitmask.
// Bit v set <=> vertex v is a member.  Cheap by value; all set algebra is
// word ops.  The owning graph's vertex count bounds which bits are legal.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
    static VertexSet all(int n) { return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return bits >> v & 1; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
    VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
    VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }
    bool operator==(const VertexSet&) const = default;

    // Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }
};

// Simple undirected graph with maximum degree 3 and at most 64 vertices.
// Immutable after build(); adjacency is one bitmask row per vertex.
class SubcubicGraph {
  public:
    static constexpr int max_vertices = 64;

    SubcubicGraph() = default;

    // Validates: 0 <= n <= 64, endpoints in range, no loops, no duplicate
    // edges, every degree <= 3.
    static SubcubicGraph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    bool has_edge(int u, int v) const { return rows_[u] >> v & 1; }
    VertexSet adjacency_row(int v) const { return {rows_[v]}; }
    VertexSet vertices() const { return VertexSet::all(n_); }

    // Neighbors in ascending order (at most 3).
    std::vector<int> neighbors(int v) const { return VertexSet{rows_[v]}.to_vector(); }

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SubcubicGraph&) const = default;

  private:
    int n_ = 0;
    int m_ = 0;
    std::array<std::uint64_t, max_vertices> rows_{};
};

// --- neighborhoods and distance ---

VertexSet closed_neighborhood(const SubcubicGraph& g, int v); // N[v]
VertexSet ball2(const SubcubicGraph& g, int v);               // N_2[v], everything within distance 2

// BFS distance; nullopt when u and v are in different components.
std::optional<int> distance(const SubcubicGraph& g, int u, int v);

// --- cuts, components, weights ---

// Edges with exactly one endpoint in x, as (inside, outside), sorted.
std::vector<std::pair<int, int>> boundary(const SubcubicGraph& g, VertexSet x);
int boundary_size(const SubcubicGraph& g, VertexSet x);

// Connected components, ordered by smallest member vertex.
std::vector<VertexSet> components(const SubcubicGraph& g);

bool is_connected(const SubcubicGraph& g);
bool is_cubic(const SubcubicGraph& g); // 3-regular and nonempty
bool has_triangle(const SubcubicGraph& g);

// A component is "bad" when it is a 4-cycle or a K4 with one edge subdivided
// (five vertices, degrees 2,3,3,3,3, the 2-vertex's neighbors nonadjacent and
// the rest mutually adjacent).
bool is_c4_component(const SubcubicGraph& g, VertexSet component);
bool is_k4star_component(const SubcubicGraph& g, VertexSet component);

// Degree tallies, bad-component counts and the weight
//   omega = 9*n0 + 5*n1 + 4*n2 + 3*n3 + 2*(b1 + b2)
// where b1 counts 4-cycle components and b2 counts subdivided-K4 components.
struct WeightReport {
    int n0 = 0, n1 = 0, n2 = 0, n3 = 0;
    int b1 = 0, b2 = 0;
    int b() const { return b1 + b2; }
    int omega() const { return 9 * n0 + 5 * n1 + 4 * n2 + 3 * n3 + 2 * (b1 + b2); }
};

WeightReport classify_bad_components(const SubcubicGraph& g);
int omega(const SubcubicGraph& g);

// Per-vertex weight 9 if isolated else 6 - deg(v); set_weight sums it.
// Note set_weight(g, all) differs from omega(g) by the 2*b term.
int vertex_weight(const SubcubicGraph& g, int v);
int set_weight(const SubcubicGraph& g, VertexSet x);

// x plus every vertex of G - x that is isolated there or lies in a 4-cycle
// component there.  Idempotent; G - closure(x) has neither feature.
VertexSet closure(const SubcubicGraph& g, VertexSet x);

// --- surgery ---

// Subgraph induced on `keep`, vertices renumbered ascending.  to_parent maps
// new index -> old index.
struct Subgraph {
    SubcubicGraph graph;
    std::vector<int> to_parent;
};

Subgraph induced_subgraph(const SubcubicGraph& g, VertexSet keep);
Subgraph delete_vertices(const SubcubicGraph& g, VertexSet drop);
SubcubicGraph delete_edge(const SubcubicGraph& g, int u, int v);

// g1 followed by g2, with g2's vertices shifted up by g1.vertex_count().
SubcubicGraph disjoint_union(const SubcubicGraph& g1, const SubcubicGraph& g2);

// Result of smoothing every degree-2 vertex (replace each maximal chain of
// 2-vertices by a single edge between its endpoints).  The result can be a
// multigraph, so edges live in a plain list with repeats allowed; `simple()`
// converts when no repeats exist.
struct SuppressedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // (u, v) with u <= v, sorted, repeats = parallel edges
    std::vector<int> to_parent;             // new index -> old index
    bool is_simple = false;

    SubcubicGraph simple() const; // errc::not_suppressible when !is_simple
};

// Pre: g connected, at least one vertex of degree 3 (so every 2-chain ends).
// errc::not_suppressible when a smoothing would create a loop.
SuppressedGraph suppress_degree2(const SubcubicGraph& g);

} // namespace bdom
