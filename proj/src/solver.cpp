#include "bdom/solver.hpp"

#include <algorithm>

namespace bdom {

namespace {

struct Masks {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> n1, n2;

    explicit Masks(const SubcubicGraph& g) : n(g.vertex_count()), full(VertexSet::all(n).bits) {
        n1.reserve(n);
        n2.reserve(n);
        for (int v = 0; v < n; ++v) {
            n1.push_back(closed_neighborhood(g, v).bits);
            n2.push_back(ball2(g, v).bits);
        }
    }
};

void check_deadline(const SolveOptions& opts, std::uint64_t nodes) {
    if (opts.deadline && (nodes & 2047) == 0 &&
        std::chrono::steady_clock::now() > *opts.deadline)
        fail(errc::timeout, "solve deadline passed");
}

// --- exhaustive reference search ---

struct BruteState {
    const Masks& m;
    const SolveOptions& opts;
    std::vector<std::uint8_t> values;
    std::uint64_t nodes = 0;

    bool assign(int v, int remaining) { // true once a dominating assignment is found
        if (v == m.n) {
            if (remaining != 0) return false;
            ++nodes;
            check_deadline(opts, nodes);
            std::uint64_t heard = 0;
            for (int u = 0; u < m.n; ++u) {
                if (values[u] == 1) heard |= m.n1[u];
                else if (values[u] == 2) heard |= m.n2[u];
            }
            return heard == m.full;
        }
        for (int val = 0; val <= std::min(remaining, 2); ++val) {
            values[v] = std::uint8_t(val);
            if (assign(v + 1, remaining - val)) return true;
            values[v] = 0;
        }
        return false;
    }
};

// --- branch and bound over cover actions ---

struct BnbState {
    const Masks& m;
    const SolveOptions& opts;
    std::vector<std::uint8_t> f;
    std::vector<std::uint8_t> best_values;
    int best = 0;
    std::uint64_t nodes = 0;

    int lower_bound(std::uint64_t covered) const {
        return (std::popcount(m.full & ~covered) + 4) / 5;
    }

    void dfs(std::uint64_t covered, int cost) {
        ++nodes;
        check_deadline(opts, nodes);
        if (covered == m.full) {
            if (cost < best) {
                best = cost;
                best_values = f;
            }
            return;
        }
        if (cost + lower_bound(covered) >= best) return;

        // branch on the uncovered vertex with the fewest remaining covers
        std::uint64_t uncovered = m.full & ~covered;
        int pick = -1, pick_count = 0;
        for (std::uint64_t b = uncovered; b; b &= b - 1) {
            int u = std::countr_zero(b);
            int count = 0;
            for (int v = 0; v < m.n; ++v) {
                if (f[v] == 0 && (m.n1[v] >> u & 1)) ++count;
                if (f[v] <= 1 && (m.n2[v] >> u & 1)) ++count;
            }
            if (pick < 0 || count < pick_count) {
                pick = u;
                pick_count = count;
            }
        }

        struct Action {
            int v, power, delta;
            std::uint64_t gain;
        };
        std::vector<Action> actions;
        for (int v = 0; v < m.n; ++v) {
            std::uint64_t gain1 = m.n1[v] & uncovered;
            std::uint64_t gain2 = m.n2[v] & uncovered;
            if (f[v] == 0 && (gain1 >> pick & 1)) actions.push_back({v, 1, 1, gain1});
            if (f[v] <= 1 && (gain2 >> pick & 1)) {
                // power 2 is pointless while it adds nothing beyond power 1
                if (f[v] == 1) actions.push_back({v, 2, 1, gain2});
                else if (gain2 != gain1) actions.push_back({v, 2, 2, gain2});
            }
        }
        std::sort(actions.begin(), actions.end(), [](const Action& a, const Action& b) {
            long long lhs = (long long)std::popcount(a.gain) * b.delta;
            long long rhs = (long long)std::popcount(b.gain) * a.delta;
            if (lhs != rhs) return lhs > rhs;
            if (a.v != b.v) return a.v < b.v;
            return a.power < b.power;
        });
        for (const Action& a : actions) {
            std::uint8_t old = f[a.v];
            f[a.v] = std::uint8_t(a.power);
            dfs(covered | a.gain, cost + a.delta);
            f[a.v] = old;
        }
    }
};

std::pair<int, std::vector<std::uint8_t>> greedy_cover(const Masks& m) {
    std::vector<std::uint8_t> f(m.n, 0);
    std::uint64_t covered = 0;
    int cost = 0;
    while (covered != m.full) {
        int bv = -1, bp = 0, bdelta = 1;
        std::uint64_t bgain = 0;
        for (int v = 0; v < m.n; ++v) {
            for (int power = f[v] + 1; power <= 2; ++power) {
                std::uint64_t gain = (power == 1 ? m.n1[v] : m.n2[v]) & ~covered;
                int delta = power - f[v];
                if (gain == 0) continue;
                long long lhs = (long long)std::popcount(gain) * bdelta;
                long long rhs = (long long)std::popcount(bgain) * delta;
                if (bv < 0 || lhs > rhs) {
                    bv = v;
                    bp = power;
                    bdelta = delta;
                    bgain = gain;
                }
            }
        }
        f[bv] = std::uint8_t(bp);
        covered |= bgain;
        cost += bdelta;
    }
    return {cost, f};
}

} // namespace

SolveResult gamma_brute_force(const SubcubicGraph& g, const SolveOptions& opts) {
    if (g.vertex_count() > opts.brute_cap)
        fail(errc::size_limit_exceeded,
             "brute force capped at " + std::to_string(opts.brute_cap) + " vertices");
    check_deadline(opts, 0);
    Masks m(g);
    BruteState st{m, opts, std::vector<std::uint8_t>(m.n, 0), 0};
    SolveResult out;
    out.method = SolveMethod::brute_force;
    for (int c = 0; c <= 2 * m.n; ++c) {
        if (st.assign(0, c)) {
            out.gamma = c;
            out.certificate = Broadcast(g, st.values);
            out.nodes = st.nodes;
            return out;
        }
    }
    // only the empty graph dominates with cost 0 and no assignment at all
    out.certificate = Broadcast(g);
    out.nodes = st.nodes;
    return out;
}

SolveResult gamma_exact(const SubcubicGraph& g, const SolveOptions& opts) {
    if (g.vertex_count() > opts.vertex_cap)
        fail(errc::size_limit_exceeded,
             "solver capped at " + std::to_string(opts.vertex_cap) + " vertices");
    check_deadline(opts, 0);
    SolveResult out;
    out.method = SolveMethod::branch_and_bound;
    Broadcast cert(g);
    for (const VertexSet& comp : components(g)) {
        Subgraph sub = induced_subgraph(g, comp);
        Masks m(sub.graph);
        auto [ub, ub_values] = greedy_cover(m);
        BnbState st{m, opts, std::vector<std::uint8_t>(m.n, 0), ub_values, ub, 0};
        st.dfs(0, 0);
        out.gamma += st.best;
        out.nodes += st.nodes;
        for (int v = 0; v < m.n; ++v)
            if (st.best_values[v] > 0) cert.set(sub.to_parent[v], st.best_values[v]);
    }
    out.certificate = std::move(cert);
    return out;
}

std::pair<int, Broadcast> greedy_upper_bound(const SubcubicGraph& g) {
    Masks m(g);
    auto [cost, values] = greedy_cover(m);
    return {cost, Broadcast(g, values)};
}

int counting_lower_bound(const SubcubicGraph& g) {
    int total = 0;
    for (const VertexSet& comp : components(g)) total += (comp.count() + 4) / 5;
    return total;
}

} // namespace bdom
