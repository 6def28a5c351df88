#include "doctest.h"

#include <chrono>

#include "bdom/generator.hpp"
#include "bdom/graph_io.hpp"
#include "bdom/solver.hpp"

#include "oracles.hpp"

using namespace bdom;
using testutil::thrown_code;

TEST_SUITE_BEGIN("solver");

namespace {

// Pinned optima, re-derived independently before being frozen here.
const std::pair<const char*, int> known[] = {
    {"k1", 1},   {"k2", 1}, {"k4", 1},    {"p5", 2},       {"p6", 2},
    {"c4", 2},   {"c5", 2}, {"c6", 2},    {"k33", 2},      {"k4star", 2},
    {"prism", 2}, {"k13", 1}, {"petersen", 2},
};

} // namespace

TEST_CASE("known optima, both methods") {
    for (auto [name, want] : known) {
        CAPTURE(name);
        SubcubicGraph g = named(name);
        SolveResult bb = gamma_exact(g);
        SolveResult bf = gamma_brute_force(g);
        CHECK(bb.gamma == want);
        CHECK(bf.gamma == want);
        CHECK(bb.method == SolveMethod::branch_and_bound);
        CHECK(bf.method == SolveMethod::brute_force);
        for (const SolveResult* r : {&bb, &bf}) {
            CHECK(r->certificate.cost() == want);
            CHECK(r->certificate.dominates());
            CHECK(testutil::dominating_by_definition(g, r->certificate.values()));
        }
    }
}

TEST_CASE("empty graph costs nothing") {
    SubcubicGraph g = SubcubicGraph::build(0, {});
    CHECK(gamma_exact(g).gamma == 0);
    CHECK(gamma_brute_force(g).gamma == 0);
}

TEST_CASE("cost adds up over components") {
    SubcubicGraph u = disjoint_union(named("petersen"), named("c4"));
    CHECK(gamma_exact(u).gamma == 4);
    SubcubicGraph u2 = disjoint_union(u, named("k1"));
    SolveResult r = gamma_exact(u2);
    CHECK(r.gamma == 5);
    CHECK(r.certificate.dominates());
    CHECK(gamma_brute_force(disjoint_union(named("c4"), named("k1"))).gamma == 3);
}

TEST_CASE("branch and bound matches brute force on every small graph") {
    for (int n = 1; n <= 7; ++n) {
        for (const SubcubicGraph& g : enumerate_connected(n, false).graphs) {
            CAPTURE(to_graph6(g));
            SolveResult bb = gamma_exact(g);
            SolveResult bf = gamma_brute_force(g);
            CHECK(bb.gamma == bf.gamma);
            CHECK(bb.certificate.dominates());
            CHECK(bb.certificate.cost() == bb.gamma);
        }
    }
}

TEST_CASE("branch and bound matches brute force on random graphs") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 150; ++trial) {
        SubcubicGraph g = testutil::random_subcubic(rng, 2 + trial % 9);
        CAPTURE(to_graph6(g));
        CHECK(gamma_exact(g).gamma == gamma_brute_force(g).gamma);
    }
}

TEST_CASE("same input, same run") {
    SubcubicGraph g = named("petersen");
    SolveResult a = gamma_exact(g);
    SolveResult b = gamma_exact(g);
    CHECK(a.gamma == b.gamma);
    CHECK(a.nodes == b.nodes);
    CHECK(a.certificate.values() == b.certificate.values());
}

TEST_CASE("greedy is dominating and never better than optimal") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 80; ++trial) {
        SubcubicGraph g = testutil::random_subcubic(rng, 2 + trial % 10);
        auto [cost, f] = greedy_upper_bound(g);
        CHECK(f.dominates());
        CHECK(f.cost() == cost);
        CHECK(cost >= gamma_exact(g).gamma);
    }
    // for the Petersen graph the very first greedy pick is already optimal
    CHECK(greedy_upper_bound(named("petersen")).first == 2);
}

TEST_CASE("counting bound sits below the optimum") {
    CHECK(counting_lower_bound(named("petersen")) == 2); // 10/5, tight
    CHECK(counting_lower_bound(named("c4")) == 1);
    CHECK(counting_lower_bound(named("k1")) == 1);
    CHECK(counting_lower_bound(disjoint_union(named("petersen"), named("k1"))) == 3);
    for (int n = 1; n <= 6; ++n)
        for (const SubcubicGraph& g : enumerate_connected(n, false).graphs)
            CHECK(counting_lower_bound(g) <= gamma_exact(g).gamma);
}

TEST_CASE("size caps are enforced") {
    SubcubicGraph p13 = named("p13");
    CHECK(thrown_code([&] { gamma_brute_force(p13); }) == errc::size_limit_exceeded);
    SolveOptions small;
    small.vertex_cap = 5;
    CHECK(thrown_code([&] { gamma_exact(named("c6"), small); }) == errc::size_limit_exceeded);
    SolveOptions wide;
    wide.brute_cap = 13;
    CHECK(gamma_brute_force(p13, wide).gamma == gamma_exact(p13).gamma);
}

TEST_CASE("an expired deadline stops the solve") {
    SolveOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
    CHECK(thrown_code([&] { gamma_exact(named("petersen"), opts); }) == errc::timeout);
    CHECK(thrown_code([&] { gamma_brute_force(named("c6"), opts); }) == errc::timeout);
}

TEST_SUITE_END();
