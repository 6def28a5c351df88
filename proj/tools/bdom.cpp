// Command-line front end: enumerate, solve, analyze, reduce, verify.
// Everything prints JSON lines (or graph6 lines for `gen`) so runs can be
// piped into jq or diffed between revisions.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdom/broadcast.hpp"
#include "bdom/generator.hpp"
#include "bdom/graph.hpp"
#include "bdom/graph_io.hpp"
#include "bdom/reductions.hpp"
#include "bdom/solver.hpp"
#include "bdom/structure.hpp"
#include "bdom/verify.hpp"

using nlohmann::ordered_json;

namespace {

// Graphs from --name's plus one per nonblank line of the input ('-' = stdin).
std::vector<bdom::SubcubicGraph> read_graphs(const std::string& input, const std::vector<std::string>& names) {
    std::vector<bdom::SubcubicGraph> out;
    for (const std::string& name : names) out.push_back(bdom::named(name));
    if (input.empty()) return out;

    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
        file.open(input);
        if (!file) bdom::fail(bdom::errc::io_failure, "cannot open '" + input + "'");
        in = &file;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back(bdom::parse_graph_line(line));
        } catch (const bdom::error& e) {
            bdom::fail(bdom::errc::io_failure,
                       (input == "-" ? std::string("stdin") : input) + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

bdom::VertexSet parse_vertex_list(const std::string& text, int n) {
    bdom::VertexSet x;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0 || v >= n) bdom::fail(bdom::errc::invalid_argument, "vertex " + tok + " out of range");
        x.add(v);
    }
    return x;
}

ordered_json profile_json(const bdom::StructureProfile& p) {
    return {{"vertex", p.vertex}, {"degree", p.degree},   {"p2", p.p2},
            {"p3", p.p3},         {"beta", p.beta},       {"beta2", p.beta2},
            {"beta3", p.beta3},   {"ell", p.ell},         {"on_triangle", p.on_triangle},
            {"vt", p.in_vt},      {"vstar", p.in_vstar},  {"vstarstar", p.in_vstarstar}};
}

ordered_json set_profile_json(const bdom::SetProfile& sp) {
    return {{"x", sp.x.to_vector()},
            {"boundary_size", sp.boundary_size},
            {"a", sp.a},
            {"a3", sp.a3},
            {"a4", sp.a4},
            {"i", sp.i},
            {"i2", sp.i2},
            {"i3", sp.i3},
            {"closure", sp.closed.to_vector()},
            {"refinement_exact", sp.refinement_exact}};
}

ordered_json identity_json(const bdom::IdentityReport& r) {
    return {{"hypotheses_met", r.hypotheses_met}, {"holds", r.holds}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

const char* method_name(bdom::SolveMethod m) {
    return m == bdom::SolveMethod::brute_force ? "brute" : "bb";
}

int run_gen(int n, bool cubic, bool count_only, int limit, const std::string& format) {
    bdom::GraphStream stream = bdom::enumerate_connected(n, cubic, limit);
    if (count_only) {
        std::cout << stream.graphs.size() << "\n";
        return 0;
    }
    for (const auto& g : stream.graphs)
        std::cout << (format == "sparse6" ? bdom::to_sparse6(g) : bdom::to_graph6(g)) << "\n";
    return 0;
}

int run_solve(const std::vector<bdom::SubcubicGraph>& graphs, const std::string& method, int cap) {
    bdom::SolveOptions opts;
    if (cap > 0) {
        opts.vertex_cap = cap;
        opts.brute_cap = cap;
    }
    for (const auto& g : graphs) {
        auto start = std::chrono::steady_clock::now();
        bdom::SolveResult res = method == "brute" ? bdom::gamma_brute_force(g, opts) : bdom::gamma_exact(g, opts);
        auto millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        ordered_json j{{"graph6", bdom::to_graph6(g)},
                       {"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"gamma", res.gamma},
                       {"certificate", bdom::to_broadcast_literal(res.certificate)},
                       {"nodes", res.nodes},
                       {"millis", millis},
                       {"method", method_name(res.method)}};
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_analyze(const std::vector<bdom::SubcubicGraph>& graphs, bool profiles, int vertex, const std::string& set_list) {
    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        ordered_json j{{"graph6", bdom::to_graph6(g)}, {"n", n}, {"m", g.edge_count()}};

        if (vertex >= 0) {
            if (vertex >= n) bdom::fail(bdom::errc::invalid_argument, "vertex out of range");
            bdom::StructureProfile p = bdom::profile(g, vertex);
            j["profile"] = profile_json(p);
            j["boundary_identity_applicable"] = bdom::boundary_identity_applicable(g, vertex);
            if (j["boundary_identity_applicable"].get<bool>())
                j["boundary_identity_holds"] = bdom::check_boundary_identity(g, vertex);
            j["closure_weight_identity"] = identity_json(bdom::closure_weight_identity(g, vertex));
            bdom::ChainReport chain = bdom::check_chain_inequalities(g, vertex);
            ordered_json lines = ordered_json::array();
            for (const auto& line : chain.lines)
                lines.push_back({{"name", line.name},
                                 {"hypotheses_met", line.hypotheses_met},
                                 {"holds", line.holds},
                                 {"lhs", line.lhs},
                                 {"rhs", line.rhs}});
            j["chain"] = lines;
            if (p.in_vstar) {
                bdom::QCase qc = bdom::classify_case(g, vertex);
                j["qcase"] = {{"tag", bdom::qtag_name(qc.matched)}, {"r", qc.r}, {"a", qc.a}, {"i", qc.i}};
            }
        } else if (!set_list.empty()) {
            bdom::VertexSet x = parse_vertex_list(set_list, n);
            j["set_profile"] = set_profile_json(bdom::set_profile(g, x));
            j["equation1"] = identity_json(bdom::equation1_identity(g, x));
        } else {
            bdom::WeightReport w = bdom::classify_bad_components(g);
            j["omega"] = w.omega();
            j["degrees"] = {{"n0", w.n0}, {"n1", w.n1}, {"n2", w.n2}, {"n3", w.n3}};
            j["bad_components"] = {{"b1", w.b1}, {"b2", w.b2}};
            std::vector<int> vt, vstar, vstarstar;
            ordered_json rows = ordered_json::array();
            for (int v = 0; v < n; ++v) {
                bdom::StructureProfile p = bdom::profile(g, v);
                if (p.in_vt) vt.push_back(v);
                if (p.in_vstar) vstar.push_back(v);
                if (p.in_vstarstar) vstarstar.push_back(v);
                if (profiles) rows.push_back(profile_json(p));
            }
            j["vt"] = vt;
            j["vstar"] = vstar;
            j["vstarstar"] = vstarstar;
            if (profiles) j["profiles"] = rows;
        }
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_reduce(const std::vector<bdom::SubcubicGraph>& graphs, int apply, bool lift) {
    for (const auto& g : graphs) {
        auto found = bdom::find_separated_c4(g);
        auto doubly = bdom::find_doubly_attached_c4(g);
        if (apply < 0) {
            ordered_json list = ordered_json::array();
            for (const auto& s : found)
                list.push_back({{"cycle", s.cycle},
                                {"v1", s.v1},
                                {"u1", s.u1},
                                {"v2", s.v2},
                                {"u2", s.u2}});
            ordered_json dlist = ordered_json::array();
            for (const auto& s : doubly) dlist.push_back({{"cycle", s.cycle}, {"u", s.u1}});
            ordered_json j{{"graph6", bdom::to_graph6(g)},
                           {"separated_c4", list},
                           {"doubly_attached_c4", dlist}};
            std::cout << j.dump() << "\n";
            continue;
        }
        if (apply >= static_cast<int>(found.size()))
            bdom::fail(bdom::errc::invalid_argument,
                       "only " + std::to_string(found.size()) + " separated 4-cycles found");
        const bdom::SeparatedC4& s = found[apply];
        bdom::ContractionResult cr = bdom::contract_c4(g, s);
        ordered_json j{{"graph6", bdom::to_graph6(g)},
                       {"cycle", s.cycle},
                       {"contracted", bdom::to_graph6(cr.contracted)},
                       {"w", cr.w},
                       {"omega_before", cr.omega_before},
                       {"omega_after", cr.omega_after},
                       {"omega_delta", cr.omega_delta()},
                       {"delta_condition", cr.delta_condition}};
        if (lift) {
            bdom::SolveResult res = bdom::gamma_exact(cr.contracted);
            bdom::Broadcast fp = res.certificate;
            if (fp.value(cr.w) == 2) fp = bdom::normalize_away_2(fp, cr.w);
            bdom::Broadcast lifted = bdom::lift_broadcast(g, cr, s, fp);
            j["gamma_contracted"] = res.gamma;
            j["lift_cost"] = lifted.cost();
            j["lift_certificate"] = bdom::to_broadcast_literal(lifted);
            j["lift_dominates"] = lifted.dominates();
        }
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_verify(std::vector<bdom::SubcubicGraph> graphs, bdom::GraphStream::Source source,
               const std::vector<std::string>& checks, const std::string& format, int threads,
               std::int64_t timeout_ms) {
    bdom::GraphStream stream;
    stream.source = source;
    stream.graphs = std::move(graphs);

    bdom::VerifyOptions opts;
    opts.threads = threads;
    opts.per_graph_timeout_ms = timeout_ms;
    std::vector<bdom::VerificationRecord> records = bdom::verify_stream(stream, opts);

    auto enabled = [&checks](const char* name) {
        if (checks.empty()) return true;
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };
    for (auto& r : records) {
        if (!enabled("subcubic")) r.weight_bound_ok = true;
        if (!enabled("cubic")) r.cubic_bound_ok = true;
        if (!enabled("four_ninths")) r.four_ninths_ok = true;
    }

    bdom::VerifySummary s = bdom::summarize(records);
    if (format == "jsonl")
        std::cout << bdom::to_jsonl(records);
    else if (format == "csv")
        std::cout << bdom::to_csv(records);
    else
        std::cout << bdom::to_text(s);

    if (s.violations > 0) return 2;
    if (s.timeouts > 0 || s.size_limits > 0) return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-limited dominating broadcasts on subcubic graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "enumerate connected subcubic graphs up to isomorphism");
    int gen_n = 0, gen_limit = 0;
    bool gen_cubic = false, gen_count = false;
    std::string gen_format = "graph6";
    gen->add_option("-n,--vertices", gen_n, "number of vertices")->required();
    gen->add_flag("--cubic", gen_cubic, "3-regular graphs only");
    gen->add_flag("--count-only", gen_count, "print how many instead of the graphs");
    gen->add_option("--limit", gen_limit, "override the default size cap");
    gen->add_option("--format", gen_format, "graph6 (default) or sparse6")
        ->check(CLI::IsMember({"graph6", "sparse6"}));

    std::string solve_input, solve_method = "bb";
    std::vector<std::string> solve_names;
    int solve_cap = 0;
    auto* solve = app.add_subcommand("solve", "exact gamma_b2 with an optimal certificate");
    solve->add_option("-i,--input", solve_input, "graph6/sparse6 lines ('-' for stdin)");
    solve->add_option("--name", solve_names, "catalogue graph, repeatable (k4, petersen, c11, ...)");
    solve->add_option("--method", solve_method, "bb (default) or brute")->check(CLI::IsMember({"bb", "brute"}));
    solve->add_option("--cap", solve_cap, "vertex cap override");

    std::string an_input, an_set;
    std::vector<std::string> an_names;
    bool an_profiles = false;
    int an_vertex = -1;
    auto* analyze = app.add_subcommand("analyze", "vertex/set structure: profiles, identities, case analysis");
    analyze->add_option("-i,--input", an_input, "graph6/sparse6 lines ('-' for stdin)");
    analyze->add_option("--name", an_names, "catalogue graph, repeatable");
    analyze->add_flag("--profiles", an_profiles, "include one profile row per vertex");
    analyze->add_option("--vertex", an_vertex, "focus one vertex: profile, identities, chain, case");
    analyze->add_option("--set", an_set, "comma-separated vertex set: set profile and Equation (1)");

    std::string red_input;
    std::vector<std::string> red_names;
    int red_apply = -1;
    bool red_lift = false;
    auto* reduce = app.add_subcommand("reduce", "find and contract separated 4-cycles");
    reduce->add_option("-i,--input", red_input, "graph6/sparse6 lines ('-' for stdin)");
    reduce->add_option("--name", red_names, "catalogue graph, repeatable");
    reduce->add_option("--apply", red_apply, "contract the k-th separated 4-cycle");
    reduce->add_flag("--lift", red_lift, "also solve the contraction and lift the certificate back");

    std::string ver_input, ver_format = "summary";
    std::vector<std::string> ver_names, ver_checks;
    int ver_n = 0, ver_limit = 0, ver_threads = 1;
    bool ver_cubic = false;
    std::int64_t ver_timeout = 30'000;
    auto* verify = app.add_subcommand("verify", "check 9*gamma <= omega and friends over a corpus");
    verify->add_option("-i,--input", ver_input, "graph6/sparse6 lines ('-' for stdin)");
    verify->add_option("--name", ver_names, "catalogue graph, repeatable");
    verify->add_option("-n,--vertices", ver_n, "generate all connected graphs on n vertices instead");
    verify->add_flag("--cubic", ver_cubic, "generated corpus: 3-regular only");
    verify->add_option("--limit", ver_limit, "generator size cap override");
    verify->add_option("--checks", ver_checks, "subset of {subcubic, cubic, four_ninths}; default all")
        ->check(CLI::IsMember({"subcubic", "cubic", "four_ninths"}));
    verify->add_option("--format", ver_format, "summary (default), jsonl or csv")
        ->check(CLI::IsMember({"summary", "jsonl", "csv"}));
    verify->add_option("--threads", ver_threads, "worker threads");
    verify->add_option("--timeout-ms", ver_timeout, "per-graph deadline, <= 0 to disable");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(gen_n, gen_cubic, gen_count, gen_limit, gen_format);
        if (solve->parsed()) return run_solve(read_graphs(solve_input, solve_names), solve_method, solve_cap);
        if (analyze->parsed())
            return run_analyze(read_graphs(an_input, an_names), an_profiles, an_vertex, an_set);
        if (reduce->parsed()) return run_reduce(read_graphs(red_input, red_names), red_apply, red_lift);
        if (verify->parsed()) {
            std::vector<bdom::SubcubicGraph> graphs;
            auto source = bdom::GraphStream::Source::file;
            if (ver_n > 0) {
                graphs = bdom::enumerate_connected(ver_n, ver_cubic, ver_limit).graphs;
                source = bdom::GraphStream::Source::generated;
            } else {
                graphs = read_graphs(ver_input, ver_names);
                if (ver_input.empty()) source = bdom::GraphStream::Source::named;
            }
            return run_verify(std::move(graphs), source, ver_checks, ver_format, ver_threads, ver_timeout);
        }
    } catch (const bdom::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
