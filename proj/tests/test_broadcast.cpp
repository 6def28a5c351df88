#include "doctest.h"

#include "bdom/broadcast.hpp"
#include "bdom/generator.hpp"

#include "oracles.hpp"

using namespace bdom;
using testutil::thrown_code;

TEST_SUITE_BEGIN("broadcast");

TEST_CASE("construction and mutation are range checked") {
    SubcubicGraph g = named("c4");
    CHECK(thrown_code([&] { Broadcast(g, {0, 1, 2}); }) == errc::invalid_argument);     // wrong length
    CHECK(thrown_code([&] { Broadcast(g, {0, 1, 2, 3}); }) == errc::invalid_argument);  // value 3
    Broadcast f(g);
    CHECK(thrown_code([&] { f.set(4, 1); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { f.set(0, 3); }) == errc::invalid_argument);
    f.set(0, 2);
    CHECK(f.value(0) == 2);
    CHECK(f.cost() == 2);
    CHECK(thrown_code([] { Broadcast().graph(); }) == errc::invalid_argument); // unbound
}

TEST_CASE("cost, support and coverage") {
    SubcubicGraph pet = named("petersen");
    Broadcast f(pet);
    f.set(0, 2);
    CHECK(f.cost() == 2);
    CHECK(f.support() == VertexSet::single(0));
    CHECK(f.covered_set() == pet.vertices()); // radius-2 ball fills the Petersen graph
    CHECK(f.dominates());

    Broadcast g1(pet);
    g1.set(3, 1);
    CHECK(g1.covered_set() == VertexSet::of({2, 3, 4, 8}));
    CHECK_FALSE(g1.dominates());
}

TEST_CASE("dominates matches the definition on random graphs") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        SubcubicGraph g = testutil::random_subcubic(rng, 2 + trial % 11);
        std::vector<std::uint8_t> values(g.vertex_count());
        for (auto& v : values) v = std::uint8_t(std::uniform_int_distribution<int>(0, 2)(rng));
        Broadcast f(g, values);
        CHECK(f.dominates() == testutil::dominating_by_definition(g, values));
    }
}

TEST_CASE("normalizing a power-2 vertex away keeps domination") {
    // P5 covered from its middle; pushing the 2 onto the neighbors re-covers
    SubcubicGraph p5 = named("p5");
    Broadcast f(p5);
    f.set(2, 2);
    REQUIRE(f.dominates());
    Broadcast g1 = normalize_away_2(f, 2);
    CHECK(g1.value(2) == 0);
    CHECK(g1.value(1) == 1);
    CHECK(g1.value(3) == 1);
    CHECK(g1.dominates());
    CHECK(g1.cost() == f.cost());
}

TEST_CASE("normalization never raises cost at a degree-<=2 vertex") {
    std::mt19937_64 rng(31337);
    int exercised = 0;
    for (int trial = 0; trial < 400; ++trial) {
        SubcubicGraph g = testutil::random_connected_subcubic(rng, 3 + trial % 9);
        std::vector<std::uint8_t> values(g.vertex_count());
        for (auto& v : values) v = std::uint8_t(std::uniform_int_distribution<int>(0, 2)(rng));
        Broadcast f(g, values);
        if (!f.dominates()) continue;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (f.value(w) != 2 || g.degree(w) > 2) continue;
            Broadcast h = normalize_away_2(f, w);
            CHECK(h.dominates());
            CHECK(h.cost() <= f.cost());
            ++exercised;
        }
    }
    CHECK(exercised > 50); // the property must actually have been tested
}

TEST_CASE("normalization at a degree-3 vertex may cost one more") {
    SubcubicGraph star = named("k13");
    Broadcast f(star);
    f.set(0, 2);
    Broadcast g1 = normalize_away_2(f, 0);
    CHECK(g1.dominates());
    CHECK(g1.cost() == 3); // one per leaf, against 2 before
}

TEST_CASE("normalizing an isolated transmitter cannot dominate") {
    SubcubicGraph k1 = named("k1");
    Broadcast f(k1);
    f.set(0, 1);
    CHECK(thrown_code([&] { normalize_away_2(f, 0); }) == errc::not_dominating_after_normalize);
}

TEST_CASE("unions combine disjoint supports and refuse overlap") {
    SubcubicGraph u = disjoint_union(named("c4"), named("k4"));
    Broadcast f1(u), f2(u);
    f1.set(0, 2);
    f2.set(4, 1);
    Broadcast both = broadcast_union(f1, f2);
    CHECK(both.value(0) == 2);
    CHECK(both.value(4) == 1);
    CHECK(both.cost() == 3);
    CHECK(both.dominates());

    Broadcast clash(u);
    clash.set(0, 1);
    CHECK(thrown_code([&] { broadcast_union(f1, clash); }) == errc::overlapping_domains);

    SubcubicGraph other = named("c4");
    Broadcast elsewhere(other);
    CHECK(thrown_code([&] { broadcast_union(f1, elsewhere); }) == errc::invalid_argument);
}

TEST_CASE("literals round-trip") {
    SubcubicGraph pet = named("petersen");
    Broadcast f(pet);
    f.set(7, 1);
    f.set(0, 2);
    CHECK(to_broadcast_literal(f) == "0:2,7:1");
    Broadcast back = from_broadcast_literal(pet, "0:2,7:1");
    CHECK(back.values() == f.values());
    CHECK(to_broadcast_literal(Broadcast(pet)) == "");
    CHECK(from_broadcast_literal(pet, "").cost() == 0);

    CHECK(thrown_code([&] { from_broadcast_literal(pet, "0:3"); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { from_broadcast_literal(pet, "17:1"); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { from_broadcast_literal(pet, "x:1"); }) == errc::io_failure);
    CHECK(thrown_code([&] { from_broadcast_literal(pet, "0:1,:"); }) == errc::io_failure);
    CHECK(from_broadcast_literal(pet, "0:1,,").cost() == 1); // stray commas are tolerated
}

TEST_SUITE_END();
