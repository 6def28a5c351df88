#pragma once

#include <string>
#include <vector>

#include "bdom/graph.hpp"

namespace bdom {

// Canonical graph6 string: the lexicographically least graph6 encoding over
// all relabelings, found by color-refinement with individualization.  Two
// graphs get the same string exactly when they are isomorphic, so it doubles
// as a dedupe key and a normal form for output.
std::string canonical_form(const SubcubicGraph& g);

struct GraphStream {
    enum class Source { generated, file, named };
    Source source = Source::generated;
    std::vector<SubcubicGraph> graphs;
};

// Every connected subcubic graph on exactly n vertices up to isomorphism
// (all of them, or only the 3-regular ones), grown one vertex at a time from
// K1 with canonical-form rejection.  Streams are sorted by canonical string,
// so identical parameters give identical streams.  `limit` overrides the
// default size cap (14 cubic / 10 general); above it errc::size_limit_exceeded.
GraphStream enumerate_connected(int n, bool cubic_only, int limit = 0);

// Small catalogue: k1 k2 k3 k4 k13 k33 k4star prism petersen, plus
// parameterized p<n> and c<n>.  errc::unknown_name otherwise.
SubcubicGraph named(const std::string& name);

} // namespace bdom
