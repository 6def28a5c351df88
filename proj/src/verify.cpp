#include "bdom/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "bdom/graph_io.hpp"
#include "bdom/solver.hpp"

namespace bdom {

namespace {

const char* status_name(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::ok: return "ok";
    case VerifyStatus::timeout: return "timeout";
    case VerifyStatus::size_limit: return "size_limit";
    }
    return "?";
}

VerificationRecord verify_one(const SubcubicGraph& g, const VerifyOptions& opts) {
    VerificationRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.connected = is_connected(g);
    r.cubic = is_cubic(g);
    r.omega = omega(g);

    const auto start = std::chrono::steady_clock::now();
    SolveOptions so;
    if (opts.per_graph_timeout_ms > 0) so.deadline = start + std::chrono::milliseconds(opts.per_graph_timeout_ms);
    try {
        r.gamma = gamma_exact(g, so).gamma;
        r.slack = r.omega - 9 * r.gamma;
        r.weight_bound_ok = r.slack >= 0;
        r.cubic_bound_ok = !r.cubic || 9 * r.gamma <= 3 * r.n;
        r.four_ninths_ok = !r.connected || 9 * r.gamma <= 9 * ((4 * r.n + 8) / 9);
    } catch (const error& e) {
        if (e.code() == errc::timeout)
            r.status = VerifyStatus::timeout;
        else if (e.code() == errc::size_limit_exceeded)
            r.status = VerifyStatus::size_limit;
        else
            throw;
    }
    r.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

std::vector<VerificationRecord> verify_stream(const GraphStream& stream, const VerifyOptions& opts) {
    const auto& graphs = stream.graphs;
    std::vector<VerificationRecord> records(graphs.size());
    int workers = std::max(1, opts.threads);
    if (static_cast<size_t>(workers) > graphs.size()) workers = static_cast<int>(graphs.size());

    if (workers <= 1) {
        for (size_t i = 0; i < graphs.size(); ++i) records[i] = verify_one(graphs[i], opts);
        return records;
    }

    std::atomic<size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= graphs.size()) return;
                records[i] = verify_one(graphs[i], opts);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

VerifySummary summarize(const std::vector<VerificationRecord>& records) {
    VerifySummary s;
    s.total = static_cast<int>(records.size());
    bool have_min = false;
    for (const auto& r : records) {
        if (r.status == VerifyStatus::timeout) {
            ++s.timeouts;
            continue;
        }
        if (r.status == VerifyStatus::size_limit) {
            ++s.size_limits;
            continue;
        }
        ++s.solved;
        if (!r.weight_bound_ok || !r.cubic_bound_ok || !r.four_ninths_ok) ++s.violations;
        ++s.slack_histogram[r.slack];
        if (!have_min || r.slack < s.min_slack) {
            s.min_slack = r.slack;
            s.min_slack_graph6 = r.graph6;
            have_min = true;
        }
    }
    return s;
}

std::string to_jsonl(const std::vector<VerificationRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        nlohmann::ordered_json j{
            {"graph6", r.graph6},
            {"n", r.n},
            {"m", r.m},
            {"connected", r.connected},
            {"cubic", r.cubic},
            {"omega", r.omega},
            {"gamma", r.gamma},
            {"slack", r.slack},
            {"weight_bound_ok", r.weight_bound_ok},
            {"cubic_bound_ok", r.cubic_bound_ok},
            {"four_ninths_ok", r.four_ninths_ok},
            {"millis", r.millis},
            {"status", status_name(r.status)},
        };
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<VerificationRecord>& records) {
    // graph6 bytes live in 63..126, so no quoting is ever needed
    std::string out = "graph6,n,m,connected,cubic,omega,gamma,slack,"
                      "weight_bound_ok,cubic_bound_ok,four_ninths_ok,millis,status\n";
    for (const auto& r : records) {
        std::ostringstream line;
        line << r.graph6 << ',' << r.n << ',' << r.m << ',' << int(r.connected) << ',' << int(r.cubic) << ','
             << r.omega << ',' << r.gamma << ',' << r.slack << ',' << int(r.weight_bound_ok) << ','
             << int(r.cubic_bound_ok) << ',' << int(r.four_ninths_ok) << ',' << r.millis << ','
             << status_name(r.status) << '\n';
        out += line.str();
    }
    return out;
}

std::string to_text(const VerifySummary& s) {
    std::ostringstream out;
    out << "graphs: " << s.total << " (solved " << s.solved << ", timeouts " << s.timeouts << ", size-limit "
        << s.size_limits << ")\n";
    out << "bound violations: " << s.violations << "\n";
    if (!s.min_slack_graph6.empty())
        out << "min slack omega-9*gamma: " << s.min_slack << " (e.g. " << s.min_slack_graph6 << ")\n";
    out << "slack histogram:";
    for (const auto& [slack, count] : s.slack_histogram) out << ' ' << slack << ':' << count;
    out << "\n";
    return out.str();
}

} // namespace bdom
