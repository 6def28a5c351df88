#pragma once

#include <array>

#include "bdom/broadcast.hpp"
#include "bdom/graph.hpp"

namespace bdom {

// An induced 4-cycle whose boundary is exactly the two edges v1-u1 and
// v2-u2 (v1, v2 on the cycle; subcubic degrees force v1 != v2).  `cycle` is
// in cyclic order starting at the smallest vertex.
struct SeparatedC4 {
    std::array<int, 4> cycle;
    int v1 = -1, u1 = -1;
    int v2 = -1, u2 = -1;
};

// All separated 4-cycles (u1 != u2), sorted by smallest cycle vertex.
std::vector<SeparatedC4> find_separated_c4(const SubcubicGraph& g);

// Same shape but both boundary edges land on one outside vertex (u1 == u2).
// Detected for reporting; contract_c4 refuses these.
std::vector<SeparatedC4> find_doubly_attached_c4(const SubcubicGraph& g);

// Replace the cycle by a single new vertex w adjacent to u1 and u2.  w is
// the last index of the contracted graph; to_parent maps contracted indices
// back (-1 for w).  omega drops by exactly 10 whenever neither graph has bad
// components, which is computed and reported rather than assumed.
struct ContractionResult {
    SubcubicGraph contracted;
    int w = -1;
    std::vector<int> to_parent;
    int omega_before = 0, omega_after = 0;
    bool delta_condition = false; // b(G) == 0 and b(G') == 0

    int omega_delta() const { return omega_after - omega_before; }
};

ContractionResult contract_c4(const SubcubicGraph& g, const SeparatedC4& s);

// Extend a dominating broadcast on the contracted graph to one on g costing
// exactly one more: copy the values off the cycle, drop w (which must not
// carry value 2 — normalize first) and give one cycle vertex value f(w)+1.
// The vertex is chosen by the case rules; if the rule choice fails to
// dominate, every cycle vertex is tried before errc::lift_failed.
Broadcast lift_broadcast(const SubcubicGraph& g, const ContractionResult& cr,
                         const SeparatedC4& s, const Broadcast& f);

// omega(G - e) - omega(G), with the flag for the setting that pins it to +2:
// both endpoints keep degree >= 1 afterwards and neither graph has bad
// components.
struct EdgeDeletionDelta {
    int delta = 0;
    bool plus_two_condition = false;
};

EdgeDeletionDelta edge_deletion_weight_delta(const SubcubicGraph& g, int u, int v);

} // namespace bdom
