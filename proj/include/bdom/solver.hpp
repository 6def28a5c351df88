#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "bdom/broadcast.hpp"
#include "bdom/graph.hpp"

namespace bdom {

struct SolveOptions {
    int vertex_cap = SubcubicGraph::max_vertices; // errc::size_limit_exceeded above this
    int brute_cap = 12;                           // gamma_brute_force refuses larger graphs
    std::optional<std::chrono::steady_clock::time_point> deadline; // errc::timeout when passed
};

enum class SolveMethod { brute_force, branch_and_bound };

struct SolveResult {
    int gamma = 0;
    Broadcast certificate; // dominating, cost == gamma
    std::uint64_t nodes = 0;
    SolveMethod method = SolveMethod::branch_and_bound;
};

// Minimum-cost dominating 2-limited broadcast.
//
// gamma_brute_force enumerates assignments by increasing total cost and
// returns the first dominating one — the independent reference answer.
//
// gamma_exact covers the vertex set with actions (N[v], cost 1) and
// (N_2[v], cost 2) by branch and bound: greedy incumbent, ceil(uncovered/5)
// bound (no unit of cost covers more than 5 vertices on a subcubic graph),
// branching on the uncovered vertex with the fewest remaining covering
// actions.  All tie-breaks are by vertex index, so runs are deterministic.
//
// Disconnected graphs are solved per component and summed; broadcast cost is
// additive over components.
SolveResult gamma_brute_force(const SubcubicGraph& g, const SolveOptions& opts = {});
SolveResult gamma_exact(const SubcubicGraph& g, const SolveOptions& opts = {});

// Greedy cover: repeatedly take the (vertex, power) raise with the best
// newly-covered-per-cost ratio.  Always dominating; cost >= gamma.
std::pair<int, Broadcast> greedy_upper_bound(const SubcubicGraph& g);

// ceil(|K|/5) summed over components K; never exceeds gamma.
int counting_lower_bound(const SubcubicGraph& g);

} // namespace bdom
