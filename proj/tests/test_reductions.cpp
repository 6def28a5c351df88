#include "doctest.h"

#include "bdom/generator.hpp"
#include "bdom/graph_io.hpp"
#include "bdom/reductions.hpp"
#include "bdom/solver.hpp"

#include "oracles.hpp"

using namespace bdom;
using testutil::thrown_code;

TEST_SUITE_BEGIN("reductions");

namespace {

// A path hangs off one side of a 4-cycle, a triangle off the other:
// pendant 0 - 1 - 2 - 3 - [4 5 6 7] - 8 - triangle {8,9,10}.
SubcubicGraph fixture_a() {
    return SubcubicGraph::build(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                     {6, 8}, {8, 9}, {9, 10}, {10, 8}});
}

// Both boundary edges of the 4-cycle land on the same outside vertex.
SubcubicGraph fixture_doubly() {
    return SubcubicGraph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 3}});
}

} // namespace

TEST_CASE("separated 4-cycles are found with their attachments") {
    auto found = find_separated_c4(fixture_a());
    REQUIRE(found.size() == 1);
    const SeparatedC4& s = found[0];
    CHECK(s.cycle == std::array<int, 4>{4, 5, 6, 7});
    CHECK(s.v1 == 4);
    CHECK(s.u1 == 3);
    CHECK(s.v2 == 6);
    CHECK(s.u2 == 8);
    CHECK(find_doubly_attached_c4(fixture_a()).empty());

    CHECK(find_separated_c4(named("petersen")).empty()); // girth 5
    CHECK(find_separated_c4(named("c4")).empty());       // no boundary at all
    CHECK(find_separated_c4(named("k33")).empty());      // 4-cycles, none induced-with-2-boundary
}

TEST_CASE("doubly attached 4-cycles are reported but not contracted") {
    // The fixture is K_{2,3}: three 4-cycles, each hanging off the one
    // degree-2 vertex it omits.
    SubcubicGraph g = fixture_doubly();
    CHECK(find_separated_c4(g).empty());
    auto doubly = find_doubly_attached_c4(g);
    REQUIRE(doubly.size() == 3);
    bool saw_outer = false;
    for (const SeparatedC4& s : doubly) {
        CHECK(s.u1 == s.u2);
        CHECK(thrown_code([&] { contract_c4(g, s); }) == errc::single_attachment_unsupported);
        if (s.cycle == std::array<int, 4>{1, 2, 3, 4}) {
            saw_outer = true;
            CHECK(s.u1 == 0);
        }
    }
    CHECK(saw_outer);
}

TEST_CASE("contraction rebuilds the graph and accounts the weight drop") {
    SubcubicGraph g = fixture_a();
    SeparatedC4 s = find_separated_c4(g)[0];
    ContractionResult cr = contract_c4(g, s);
    CHECK(cr.contracted.vertex_count() == 8);
    CHECK(cr.w == 7);
    CHECK(cr.to_parent == std::vector<int>{0, 1, 2, 3, 8, 9, 10, -1});
    CHECK(cr.contracted.has_edge(7, 3)); // w picked up both attachment points
    CHECK(cr.contracted.has_edge(7, 4));
    CHECK(cr.contracted.degree(7) == 2);
    CHECK(cr.omega_before == 42);
    CHECK(cr.omega_after == 32);
    CHECK(cr.omega_delta() == -10);
    CHECK(cr.delta_condition); // no bad components on either side

    // garbage shapes are rejected before any surgery
    SeparatedC4 junk = s;
    junk.u1 = 9;
    CHECK(thrown_code([&] { contract_c4(g, junk); }) == errc::invalid_argument);
}

TEST_CASE("lifting a certificate with the contraction vertex silent") {
    SubcubicGraph g = fixture_a();
    SeparatedC4 s = find_separated_c4(g)[0];
    ContractionResult cr = contract_c4(g, s);
    // w = 7 is heard from its neighbor 3; the cycle must pick up value 1
    Broadcast f(cr.contracted);
    f.set(1, 1);
    f.set(3, 1);
    f.set(5, 1);
    REQUIRE(f.dominates());
    Broadcast lifted = lift_broadcast(g, cr, s, f);
    CHECK(lifted.dominates());
    CHECK(lifted.cost() == f.cost() + 1);
    CHECK(lifted.value(6) == 1); // the corner opposite the attachment v1 = 4
    CHECK(lifted.value(1) == 1); // off-cycle values carried over
    CHECK(lifted.value(9) == 1);
}

TEST_CASE("lifting a certificate that transmits from the contraction vertex") {
    SubcubicGraph g = fixture_a();
    SeparatedC4 s = find_separated_c4(g)[0];
    ContractionResult cr = contract_c4(g, s);
    Broadcast f(cr.contracted);
    f.set(1, 2);
    f.set(5, 1);
    f.set(7, 1); // w itself transmits
    REQUIRE(f.dominates());
    Broadcast lifted = lift_broadcast(g, cr, s, f);
    CHECK(lifted.dominates());
    CHECK(lifted.cost() == f.cost() + 1);
    CHECK(lifted.value(5) == 2); // a cycle vertex within reach of both attachments, at power 2
}

TEST_CASE("a power-2 contraction vertex must be normalized before lifting") {
    SubcubicGraph g = fixture_a();
    SeparatedC4 s = find_separated_c4(g)[0];
    ContractionResult cr = contract_c4(g, s);
    Broadcast f(cr.contracted);
    f.set(7, 2);
    f.set(1, 1);
    REQUIRE(f.dominates());
    CHECK(thrown_code([&] { lift_broadcast(g, cr, s, f); }) == errc::invalid_argument);

    Broadcast fixed = normalize_away_2(f, 7);
    Broadcast lifted = lift_broadcast(g, cr, s, fixed);
    CHECK(lifted.dominates());
    CHECK(lifted.cost() == fixed.cost() + 1);
}

TEST_CASE("contract-solve-lift round trip costs exactly one more") {
    SubcubicGraph g = fixture_a();
    SeparatedC4 s = find_separated_c4(g)[0];
    ContractionResult cr = contract_c4(g, s);
    SolveResult res = gamma_exact(cr.contracted);
    CHECK(res.gamma == 3);
    Broadcast f = res.certificate;
    if (f.value(cr.w) == 2) f = normalize_away_2(f, cr.w);
    Broadcast lifted = lift_broadcast(g, cr, s, f);
    CHECK(lifted.dominates());
    CHECK(lifted.cost() == res.gamma + 1);
    CHECK(lifted.cost() >= gamma_exact(g).gamma); // lifted is feasible, not necessarily optimal
}

TEST_CASE("deleting an edge moves the weight by two in the clean setting") {
    EdgeDeletionDelta prism = edge_deletion_weight_delta(named("prism"), 0, 3);
    CHECK(prism.delta == 2);
    CHECK(prism.plus_two_condition);

    EdgeDeletionDelta c5 = edge_deletion_weight_delta(named("c5"), 0, 1);
    CHECK(c5.delta == 2);
    CHECK(c5.plus_two_condition);

    // C4 is itself a bad component: the +2 bonus evaporates with it
    EdgeDeletionDelta c4 = edge_deletion_weight_delta(named("c4"), 0, 1);
    CHECK(c4.delta == 0);
    CHECK_FALSE(c4.plus_two_condition);

    EdgeDeletionDelta k4s = edge_deletion_weight_delta(named("k4star"), 2, 4);
    CHECK(k4s.delta == 0);
    CHECK_FALSE(k4s.plus_two_condition);

    // isolating an endpoint jumps its weight to 9
    EdgeDeletionDelta p2 = edge_deletion_weight_delta(named("p2"), 0, 1);
    CHECK(p2.delta == 8);
    CHECK_FALSE(p2.plus_two_condition);

    CHECK(thrown_code([] { edge_deletion_weight_delta(named("c4"), 0, 2); }) == errc::invalid_argument);
}

TEST_SUITE_END();
