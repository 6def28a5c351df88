#include "bdom/generator.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "bdom/graph_io.hpp"

namespace bdom {

namespace {

// One round of color refinement: re-rank vertices by (own color, sorted
// neighbor colors) until the number of classes stops growing.  Splits only,
// never merges, so equal class count means a fixed point.
std::vector<int> refine(const SubcubicGraph& g, std::vector<int> color) {
    const int n = g.vertex_count();
    int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    for (;;) {
        std::vector<std::array<int, 4>> sig(n, {0, -1, -1, -1});
        for (int v = 0; v < n; ++v) {
            sig[v][0] = color[v];
            int k = 1;
            for (int u : g.neighbors(v)) sig[v][k++] = color[u];
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::map<std::array<int, 4>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[v] = rank.at(sig[v]);
        if (next == classes) return color;
        classes = next;
    }
}

std::string leaf_code(const SubcubicGraph& g, const std::vector<int>& color) {
    const int n = g.vertex_count();
    std::vector<int> old_of(n); // position -> original vertex
    for (int v = 0; v < n; ++v) old_of[color[v]] = v;
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(old_of[i], old_of[j])) edges.push_back({i, j});
    return to_graph6(SubcubicGraph::build(n, edges));
}

// Individualization-refinement: branch on each member of the first
// non-singleton class, take the lexicographically least leaf encoding.
// Fixed-n graph6 strings compare like their adjacency bitstrings, so the
// minimum over leaves is a canonical form.
void canon_search(const SubcubicGraph& g, std::vector<int> color, std::string& best) {
    color = refine(g, color);
    const int n = g.vertex_count();
    int target = -1;
    for (int c = 0; c < n && target < 0; ++c) {
        int count = 0;
        for (int v = 0; v < n; ++v) count += color[v] == c;
        if (count > 1) target = c;
    }
    if (target < 0) {
        std::string code = leaf_code(g, color);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> split(n);
        for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + (u == v ? 0 : 1);
        canon_search(g, std::move(split), best);
    }
}

// Edge-endpoint slots still missing from degree 3.  A graph that should end
// up cubic after `remaining` more vertices arrive can carry at most
// 3*remaining open slots, since later vertices only attach to earlier ones.
int deficiency(const SubcubicGraph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d += 3 - g.degree(v);
    return d;
}

SubcubicGraph cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return SubcubicGraph::build(k, edges);
}

SubcubicGraph path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return SubcubicGraph::build(k, edges);
}

} // namespace

std::string canonical_form(const SubcubicGraph& g) {
    std::string best;
    canon_search(g, std::vector<int>(g.vertex_count(), 0), best);
    return best;
}

GraphStream enumerate_connected(int n, bool cubic_only, int limit) {
    if (limit <= 0) limit = cubic_only ? 14 : 10;
    if (n < 1)
        fail(errc::invalid_argument, "enumerate_connected: n must be positive");
    if (n > limit)
        fail(errc::size_limit_exceeded,
             "enumerate_connected: n = " + std::to_string(n) + " exceeds cap " + std::to_string(limit));

    GraphStream out;
    out.source = GraphStream::Source::generated;
    if (cubic_only && (n < 4 || n % 2 != 0)) return out; // no cubic graph on that many vertices

    // Grow one vertex per level.  Every connected graph has a non-cut vertex,
    // so peeling one off shows each level-k graph extends some level-(k-1)
    // graph by a new vertex attached to 1..3 old ones; canonical strings
    // dedupe isomorphs.
    std::set<std::string> level = {canonical_form(SubcubicGraph::build(1, {}))};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> grown;
        for (const std::string& code : level) {
            SubcubicGraph g = from_graph6(code);
            std::vector<int> open;
            for (int v = 0; v < k - 1; ++v)
                if (g.degree(v) < 3) open.push_back(v);
            std::vector<std::vector<int>> attach;
            for (size_t i = 0; i < open.size(); ++i) {
                attach.push_back({open[i]});
                for (size_t j = i + 1; j < open.size(); ++j) {
                    attach.push_back({open[i], open[j]});
                    for (size_t l = j + 1; l < open.size(); ++l)
                        attach.push_back({open[i], open[j], open[l]});
                }
            }
            for (const std::vector<int>& s : attach) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int u : s) edges.push_back({u, k - 1});
                SubcubicGraph h = SubcubicGraph::build(k, edges);
                if (cubic_only && deficiency(h) > 3 * (n - k)) continue;
                grown.insert(canonical_form(h));
            }
        }
        level = std::move(grown);
    }

    for (const std::string& code : level) {
        SubcubicGraph g = from_graph6(code);
        if (cubic_only && !is_cubic(g)) continue;
        out.graphs.push_back(std::move(g));
    }
    return out;
}

SubcubicGraph named(const std::string& name) {
    if (name == "k1") return SubcubicGraph::build(1, {});
    if (name == "k2") return SubcubicGraph::build(2, {{0, 1}});
    if (name == "k3") return cycle(3);
    if (name == "k4") return SubcubicGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "k13") return SubcubicGraph::build(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "k33")
        return SubcubicGraph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (name == "k4star")
        return SubcubicGraph::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    if (name == "prism")
        return SubcubicGraph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});         // outer cycle
            edges.push_back({i, i + 5});               // spoke
            edges.push_back({i + 5, (i + 2) % 5 + 5}); // pentagram
        }
        return SubcubicGraph::build(10, edges);
    }
    if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'p')) {
        int k = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
        if (ec == std::errc{} && ptr == name.data() + name.size()) {
            if (name[0] == 'c' && k >= 3 && k <= SubcubicGraph::max_vertices) return cycle(k);
            if (name[0] == 'p' && k >= 1 && k <= SubcubicGraph::max_vertices) return path(k);
        }
    }
    fail(errc::unknown_name, "named: no graph called '" + name + "'");
}

} // namespace bdom
