#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdom/generator.hpp"
#include "bdom/graph.hpp"

namespace bdom {

enum class VerifyStatus { ok, size_limit, timeout };

// One graph's verdict against the three bounds:
//   weight bound     9*gamma <= omega            (every subcubic graph)
//   cubic bound      gamma <= n/3, i.e. 9*gamma <= 3n   (3-regular only)
//   four-ninths      gamma <= ceil(4n/9)         (connected only)
// Bounds whose hypothesis fails are reported true (vacuous).
struct VerificationRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    bool connected = false;
    bool cubic = false;
    int omega = 0;
    int gamma = -1; // -1 unless status == ok
    int slack = 0;  // omega - 9*gamma
    bool weight_bound_ok = false;
    bool cubic_bound_ok = true;
    bool four_ninths_ok = true;
    std::int64_t millis = 0;
    VerifyStatus status = VerifyStatus::ok;

    bool all_ok() const { return status == VerifyStatus::ok && weight_bound_ok && cubic_bound_ok && four_ninths_ok; }
};

struct VerifyOptions {
    int threads = 1;                            // worker count; records keep input order regardless
    std::int64_t per_graph_timeout_ms = 30'000; // <= 0 disables the deadline
};

// Solves every graph in the stream and checks the bounds.  Graphs are handed
// to workers through a shared counter, so wall time scales with threads while
// the result vector stays aligned with the input.
std::vector<VerificationRecord> verify_stream(const GraphStream& stream, const VerifyOptions& opts = {});

struct VerifySummary {
    int total = 0;
    int solved = 0;
    int timeouts = 0;
    int size_limits = 0;
    int violations = 0; // solved records failing any applicable bound
    int min_slack = 0;  // over solved records (0 when none solved)
    std::string min_slack_graph6;
    std::map<int, int> slack_histogram;

    bool clean() const { return violations == 0 && timeouts == 0 && size_limits == 0; }
};

VerifySummary summarize(const std::vector<VerificationRecord>& records);

// Serializations: one JSON object per line / RFC-ish CSV with header / a
// short human-readable digest of the summary.
std::string to_jsonl(const std::vector<VerificationRecord>& records);
std::string to_csv(const std::vector<VerificationRecord>& records);
std::string to_text(const VerifySummary& s);

} // namespace bdom
