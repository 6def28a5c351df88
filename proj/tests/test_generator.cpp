#include "doctest.h"

#include <set>

#include "bdom/generator.hpp"
#include "bdom/graph_io.hpp"

#include "oracles.hpp"

using namespace bdom;
using testutil::thrown_code;

TEST_SUITE_BEGIN("generator");

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(888);
    for (const char* name : {"petersen", "k33", "prism", "k4star", "c6", "p6"}) {
        SubcubicGraph g = named(name);
        std::string canon = canonical_form(g);
        CHECK(from_graph6(canon).vertex_count() == g.vertex_count());
        for (int trial = 0; trial < 12; ++trial)
            CHECK(canonical_form(testutil::random_relabel(rng, g)) == canon);
    }
    // also across random graphs, including disconnected ones
    for (int trial = 0; trial < 40; ++trial) {
        SubcubicGraph g = testutil::random_subcubic(rng, 3 + trial % 9);
        CHECK(canonical_form(testutil::random_relabel(rng, g)) == canonical_form(g));
    }
}

TEST_CASE("canonical form separates the classic look-alikes") {
    // same order, same degree sequence, different graphs
    CHECK(canonical_form(named("k33")) != canonical_form(named("prism")));
    CHECK(canonical_form(named("c6")) != canonical_form(disjoint_union(named("k3"), named("k3"))));
    CHECK(canonical_form(named("p4")) != canonical_form(disjoint_union(named("k1"), named("k3"))));
    // decodes to the same isomorphism class it came from
    CHECK(canonical_form(from_graph6(canonical_form(named("c4")))) == canonical_form(named("c4")));
    CHECK(canonical_form(SubcubicGraph::build(0, {})) == "?");
    CHECK(canonical_form(named("k1")) == "@");
}

TEST_CASE("connected graph counts match the published small census") {
    const int want[] = {0, 1, 1, 2, 6, 10, 29, 64};
    for (int n = 1; n <= 7; ++n) {
        GraphStream s = enumerate_connected(n, false);
        CHECK(int(s.graphs.size()) == want[n]);
        CHECK(s.source == GraphStream::Source::generated);
    }
}

TEST_CASE("cubic graph counts match the published census") {
    CHECK(enumerate_connected(4, true).graphs.size() == 1);
    CHECK(enumerate_connected(6, true).graphs.size() == 2);
    CHECK(enumerate_connected(8, true).graphs.size() == 5);
    // no cubic graph has an odd or tiny vertex count
    CHECK(enumerate_connected(5, true).graphs.empty());
    CHECK(enumerate_connected(7, true).graphs.empty());
    CHECK(enumerate_connected(2, true).graphs.empty());
}

TEST_CASE("streams are sorted, duplicate-free and well-formed") {
    GraphStream s = enumerate_connected(6, false);
    std::set<std::string> seen;
    std::string prev;
    for (const SubcubicGraph& g : s.graphs) {
        CHECK(g.vertex_count() == 6);
        CHECK(is_connected(g));
        std::string canon = canonical_form(g);
        CHECK(to_graph6(g) == canon); // stream holds canonical representatives
        CHECK(seen.insert(canon).second);
        CHECK(prev < canon);
        prev = canon;
    }
    // the stream contains the catalogue's order-6 graphs
    CHECK(seen.count(canonical_form(named("c6"))));
    CHECK(seen.count(canonical_form(named("k33"))));
    CHECK(seen.count(canonical_form(named("prism"))));
    CHECK(seen.count(canonical_form(named("p6"))));

    for (const SubcubicGraph& g : enumerate_connected(8, true).graphs) CHECK(is_cubic(g));
}

TEST_CASE("size caps and argument validation") {
    CHECK(thrown_code([] { enumerate_connected(0, false); }) == errc::invalid_argument);
    CHECK(thrown_code([] { enumerate_connected(11, false); }) == errc::size_limit_exceeded);
    CHECK(thrown_code([] { enumerate_connected(16, true); }) == errc::size_limit_exceeded);
    CHECK(thrown_code([] { enumerate_connected(4, false, 3); }) == errc::size_limit_exceeded);
    CHECK(enumerate_connected(3, false, 3).graphs.size() == 2);
}

TEST_CASE("catalogue graphs have their frozen encodings") {
    CHECK(to_graph6(named("k1")) == "@");
    CHECK(to_graph6(named("petersen")) == "IheA@GUAo");
    CHECK(to_graph6(named("k33")) == "EFz_");
    CHECK(to_graph6(named("k4star")) == "D}K");
    CHECK(to_graph6(named("prism")) == "E{Sw");
    CHECK(to_graph6(named("c4")) == "Cl");
    CHECK(to_graph6(named("k4")) == "C~");
    CHECK(to_sparse6(named("p8")) == ":GaYnLz");
    CHECK(named("k3") == named("c3"));
    CHECK(named("p1") == named("k1"));
    CHECK(named("p2") == named("k2"));
    CHECK(named("c64").vertex_count() == 64);
}

TEST_CASE("unknown names are refused") {
    for (const char* bad : {"", "q7", "petersen2", "c2", "c1", "p0", "c65", "p65", "k5", "cx"})
        CHECK(thrown_code([&] { named(bad); }) == errc::unknown_name);
}

TEST_SUITE_END();
