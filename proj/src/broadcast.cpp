#include "bdom/broadcast.hpp"

#include <sstream>

namespace bdom {

Broadcast::Broadcast(const SubcubicGraph& g, std::vector<std::uint8_t> values)
    : g_(&g), values_(std::move(values)) {
    if (int(values_.size()) != g.vertex_count())
        fail(errc::invalid_argument, "broadcast has " + std::to_string(values_.size()) +
                                         " values for " + std::to_string(g.vertex_count()) +
                                         " vertices");
    for (int v : g.vertices().to_vector())
        if (values_[v] > 2) fail(errc::invalid_argument, "broadcast value above 2");
}

const SubcubicGraph& Broadcast::graph() const {
    if (g_ == nullptr) fail(errc::invalid_argument, "broadcast not bound to a graph");
    return *g_;
}

void Broadcast::set(int v, int value) {
    if (v < 0 || v >= int(values_.size())) fail(errc::invalid_argument, "vertex out of range");
    if (value < 0 || value > 2) fail(errc::invalid_argument, "broadcast value outside {0,1,2}");
    values_[v] = std::uint8_t(value);
}

int Broadcast::cost() const {
    int total = 0;
    for (auto v : values_) total += v;
    return total;
}

VertexSet Broadcast::support() const {
    VertexSet s;
    for (int v = 0; v < int(values_.size()); ++v)
        if (values_[v] > 0) s.add(v);
    return s;
}

VertexSet Broadcast::covered_set() const {
    const SubcubicGraph& g = graph();
    VertexSet heard;
    for (int v = 0; v < int(values_.size()); ++v) {
        if (values_[v] == 1) heard = heard | closed_neighborhood(g, v);
        else if (values_[v] == 2) heard = heard | ball2(g, v);
    }
    return heard;
}

Broadcast normalize_away_2(const Broadcast& f, int w) {
    const SubcubicGraph& g = f.graph();
    if (w < 0 || w >= g.vertex_count()) fail(errc::invalid_argument, "vertex out of range");
    Broadcast out = f;
    out.set(w, 0);
    for (int u : g.neighbors(w))
        if (out.value(u) < 1) out.set(u, 1);
    if (!out.dominates())
        fail(errc::not_dominating_after_normalize,
             "zeroing vertex " + std::to_string(w) + " left vertices unheard");
    return out;
}

Broadcast broadcast_union(const Broadcast& f1, const Broadcast& f2) {
    if (&f1.graph() != &f2.graph())
        fail(errc::invalid_argument, "broadcast_union: different underlying graphs");
    if (!(f1.support() & f2.support()).empty())
        fail(errc::overlapping_domains, "broadcast_union: supports overlap");
    Broadcast out = f1;
    for (int v : f2.support().to_vector()) out.set(v, f2.value(v));
    return out;
}

std::string to_broadcast_literal(const Broadcast& f) {
    std::ostringstream out;
    bool first = true;
    for (int v : f.support().to_vector()) {
        if (!first) out << ',';
        out << v << ':' << f.value(v);
        first = false;
    }
    return out.str();
}

Broadcast from_broadcast_literal(const SubcubicGraph& g, const std::string& text) {
    Broadcast out(g);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            fail(errc::io_failure, "broadcast literal item \"" + item + "\" lacks ':'");
        int v = 0, val = 0;
        try {
            v = std::stoi(item.substr(0, colon));
            val = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            fail(errc::io_failure, "broadcast literal item \"" + item + "\" is not numeric");
        }
        if (v < 0 || v >= g.vertex_count())
            fail(errc::invalid_argument, "broadcast literal vertex out of range");
        out.set(v, val);
    }
    return out;
}

} // namespace bdom
