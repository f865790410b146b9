#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semitotal/graph.hpp"
#include "semitotal/solvers.hpp"

namespace semitotal {

/// Exact non-negative rational, always in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    bool operator==(const Rational& other) const { return (*this <=> other) == 0; }
    std::strong_ordering operator<=>(const Rational& other) const;
    std::string to_string() const;  // "1/2"
};

/// A named concrete factor graph, e.g. label "path:4".
struct FactorDescriptor {
    std::string label;
    Graph graph;
};

/// Serialized evidence for anything that failed during a pair check.
struct Finding {
    std::string check;
    std::string predicate;
    bool critical = false;
    std::string detail;
    int cell = -1;
    int column = -1;
    std::vector<int> witness;
    std::string graph6_g;
    std::string graph6_h;
    std::vector<int> product_set;               // d, flat indices g·n_H + h
    std::vector<std::vector<int>> partition;    // π cells, empty when not built

    bool operator==(const Finding&) const = default;
};

struct InstanceRecord {
    std::string id;
    std::string left;
    std::string right;
    std::string graph6_g;
    std::string graph6_h;
    int n_g = 0;
    int n_h = 0;
    std::string status = "ok";  // "ok" or "skipped"
    std::string skip_reason;

    int gamma_t2_g = 0;
    int gamma_t2_h = 0;
    int rho_g = 0;
    int gamma_t2_prod = 0;
    int bound_thm1 = 0;  // ρ(G)·γ_t2(H)
    int bound_thm2 = 0;  // ⌈γ_t2(G)·γ_t2(H)/3⌉
    bool thm1_holds = true;
    bool thm2_holds = true;
    Rational ratio;  // γ_t2(G□H) / (γ_t2(G)·γ_t2(H))
    std::vector<int> product_set;

    /// pass / fail / skipped per replay check.
    std::map<std::string, std::string> replay;
    int claim2_pass = 0;
    int claim2_fail = 0;
    int t_checked = 0;
    int t_failed = 0;

    std::vector<Finding> findings;
    /// Microseconds per phase; excluded from the comparison form.
    std::map<std::string, std::int64_t> timing_us;

    bool skipped() const { return status != "ok"; }
    bool bound_violation() const { return !skipped() && (!thm1_holds || !thm2_holds); }
    int critical_findings() const;
    bool operator==(const InstanceRecord&) const = default;
};

/// Replay check names in report order.
const std::vector<std::string>& replay_check_names();

struct VerifyOptions {
    bool replay_proof = true;
    int max_product_vertices = 49;
    int replay_max_vertices = 36;
};

/// Invariant values keyed by graph6; safe to share between workers.
class SolveCache {
public:
    InvariantResult get(const Graph& g, Invariant kind);

private:
    std::mutex mutex_;
    std::map<std::string, InvariantResult> entries_;
};

InstanceRecord verify_pair(const FactorDescriptor& g, const FactorDescriptor& h, const VerifyOptions& options,
                           SolveCache* cache = nullptr);

struct CheckTally {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

struct ScanSummary {
    int records = 0;
    int skipped = 0;
    int thm1_violations = 0;
    int thm2_violations = 0;
    int findings = 0;
    int critical_findings = 0;
    std::optional<Rational> min_ratio;
    std::string min_ratio_id;
    std::map<std::string, CheckTally> checks;
};

struct ScanResult {
    std::vector<InstanceRecord> records;
    ScanSummary summary;
};

/// Worker count from SEMITOTAL_WORKERS, else the hardware concurrency.
int default_worker_count();

/// verify_pair over left × right in row-major order. Per-instance failures
/// become skipped records; the scan itself never aborts.
ScanResult scan(const std::vector<FactorDescriptor>& left, const std::vector<FactorDescriptor>& right,
                const VerifyOptions& options, int workers = 0);

ScanSummary summarize(const std::vector<InstanceRecord>& records);

struct RatioEntry {
    std::string id;
    Rational ratio;
};

struct HuntResult {
    Rational threshold;
    std::vector<RatioEntry> counterexamples;  // ratio < threshold
    std::vector<RatioEntry> closest;          // nearest to threshold, ties in scan order
};

HuntResult hunt_conjecture(const std::vector<InstanceRecord>& records, Rational threshold = {1, 2},
                           std::size_t closest_count = 10);
HuntResult hunt_conjecture(const std::vector<FactorDescriptor>& left, const std::vector<FactorDescriptor>& right,
                           const VerifyOptions& options, Rational threshold = {1, 2},
                           std::size_t closest_count = 10);

}  // namespace semitotal
