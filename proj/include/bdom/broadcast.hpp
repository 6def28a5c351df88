#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdom/graph.hpp"

namespace bdom {

// A 2-limited broadcast: every vertex transmits with power 0, 1 or 2 and is
// heard at distance <= its power.  Stored densely against a fixed graph.
class Broadcast {
  public:
    Broadcast() = default;
    explicit Broadcast(const SubcubicGraph& g) : g_(&g), values_(g.vertex_count(), 0) {}
    Broadcast(const SubcubicGraph& g, std::vector<std::uint8_t> values);

    const SubcubicGraph& graph() const;
    int value(int v) const { return values_[v]; }
    void set(int v, int value);
    const std::vector<std::uint8_t>& values() const { return values_; }

    int cost() const;
    VertexSet support() const; // vertices with positive value

    // Vertices within distance value(v) of some v with value(v) > 0.
    VertexSet covered_set() const;
    bool dominates() const { return covered_set() == graph().vertices(); }

  private:
    const SubcubicGraph* g_ = nullptr;
    std::vector<std::uint8_t> values_;
};

// Zero out w and raise each neighbor to at least 1, then re-verify
// domination (errc::not_dominating_after_normalize when that fails, e.g. for
// an isolated w).  Cost can only drop when deg(w) <= 2.
Broadcast normalize_away_2(const Broadcast& f, int w);

// Combine broadcasts on disjoint parts of one graph.  Both must be bound to
// the same graph object; overlapping supports raise errc::overlapping_domains.
Broadcast broadcast_union(const Broadcast& f1, const Broadcast& f2);

// Literal "v:value,v:value" over the support, ascending by vertex; ""
// denotes the zero broadcast.
std::string to_broadcast_literal(const Broadcast& f);
Broadcast from_broadcast_literal(const SubcubicGraph& g, const std::string& text);

} // namespace bdom
