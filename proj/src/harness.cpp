#include "semitotal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "semitotal/errors.hpp"
#include "semitotal/graph6.hpp"
#include "semitotal/proof.hpp"

namespace semitotal {

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    __int128 lhs = static_cast<__int128>(num) * other.den;
    __int128 rhs = static_cast<__int128>(other.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

int InstanceRecord::critical_findings() const {
    return static_cast<int>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) { return f.critical; }));
}

const std::vector<std::string>& replay_check_names() {
    static const std::vector<std::string> names{"pi_valid", "claim1",       "t_construct", "claim2", "double_count",
                                                "eq1",      "eq2",          "eq3",         "chain"};
    return names;
}

InvariantResult SolveCache::get(const Graph& g, Invariant kind) {
    const std::string key = std::string(invariant_name(kind)) + "|" + emit_graph6(g);
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    InvariantResult result = solve_bnb(g, kind);
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(result)).first->second;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

InvariantResult solve_with(SolveCache* cache, const Graph& g, Invariant kind) {
    return cache ? cache->get(g, kind) : solve_bnb(g, kind);
}

void skip_all_checks(InstanceRecord& rec) {
    for (const auto& name : replay_check_names()) rec.replay[name] = "skipped";
}

}  // namespace

InstanceRecord verify_pair(const FactorDescriptor& g, const FactorDescriptor& h, const VerifyOptions& options,
                           SolveCache* cache) {
    InstanceRecord rec;
    rec.left = g.label;
    rec.right = h.label;
    rec.graph6_g = emit_graph6(g.graph);
    rec.graph6_h = emit_graph6(h.graph);
    rec.id = g.label + "=" + rec.graph6_g + " x " + h.label + "=" + rec.graph6_h;
    rec.n_g = g.graph.order();
    rec.n_h = h.graph.order();
    skip_all_checks(rec);

    auto skip = [&](std::string reason) {
        rec.status = "skipped";
        rec.skip_reason = std::move(reason);
        return rec;
    };
    if (!is_isolate_free(g.graph) || !is_isolate_free(h.graph)) return skip("factor has an isolated vertex");
    if (static_cast<long long>(rec.n_g) * rec.n_h > options.max_product_vertices)
        return skip("product has " + std::to_string(rec.n_g * rec.n_h) + " vertices, cap is " +
                    std::to_string(options.max_product_vertices));

    try {
        auto start = Clock::now();
        rec.gamma_t2_g = solve_with(cache, g.graph, Invariant::GammaT2).value;
        rec.gamma_t2_h = solve_with(cache, h.graph, Invariant::GammaT2).value;
        rec.rho_g = solve_with(cache, g.graph, Invariant::Rho).value;
        rec.timing_us["factors"] = micros_since(start);

        start = Clock::now();
        const ProductGraph prod = cartesian_product(g.graph, h.graph, options.max_product_vertices);
        const InvariantResult prod_result = solve_with(cache, prod.graph(), Invariant::GammaT2);
        rec.gamma_t2_prod = prod_result.value;
        rec.product_set = prod_result.witness.members();
        rec.timing_us["product"] = micros_since(start);

        const int target = rec.gamma_t2_g * rec.gamma_t2_h;
        rec.bound_thm1 = rec.rho_g * rec.gamma_t2_h;
        rec.bound_thm2 = (target + 2) / 3;
        rec.thm1_holds = rec.gamma_t2_prod >= rec.bound_thm1;
        rec.thm2_holds = rec.gamma_t2_prod >= rec.bound_thm2;
        rec.ratio = Rational::make(rec.gamma_t2_prod, target);

        auto base_finding = [&](std::string check, std::string predicate, bool critical, std::string detail) {
            Finding f{std::move(check), std::move(predicate), critical, std::move(detail), -1, -1, {},
                      rec.graph6_g, rec.graph6_h, rec.product_set, {}};
            return f;
        };
        if (!rec.thm1_holds)
            rec.findings.push_back(base_finding("thm1", "product_at_least_rho_times_gamma_t2", true,
                                                "gamma_t2(G□H)=" + std::to_string(rec.gamma_t2_prod) + " < rho(G)*gamma_t2(H)=" +
                                                    std::to_string(rec.bound_thm1)));
        if (!rec.thm2_holds)
            rec.findings.push_back(base_finding("thm2", "product_at_least_third_of_target", true,
                                                "gamma_t2(G□H)=" + std::to_string(rec.gamma_t2_prod) + " < ceil(" +
                                                    std::to_string(target) + "/3)"));

        const bool replay = options.replay_proof && rec.n_g * rec.n_h <= options.replay_max_vertices &&
                            rec.n_g <= kOracleMaxOrder;
        if (replay) {
            start = Clock::now();
            ReplayReport rep = replay_one_third_bound(prod, prod_result.witness, rec.gamma_t2_g, rec.gamma_t2_h,
                                                      rec.gamma_t2_prod);
            rec.timing_us["replay"] = micros_since(start);
            rec.replay["pi_valid"] = check_status_name(rep.pi_valid);
            rec.replay["claim1"] = check_status_name(rep.claim1);
            rec.replay["t_construct"] = check_status_name(rep.t_construct);
            rec.replay["claim2"] = check_status_name(rep.claim2);
            rec.replay["double_count"] = check_status_name(rep.double_count);
            rec.replay["eq1"] = check_status_name(rep.eq1);
            rec.replay["eq2"] = check_status_name(rep.eq2);
            rec.replay["eq3"] = check_status_name(rep.eq3);
            rec.replay["chain"] = check_status_name(rep.chain);
            rec.claim2_pass = rep.claim2_pass;
            rec.claim2_fail = rep.claim2_fail;
            rec.t_checked = rep.t_checked;
            rec.t_failed = rep.t_failed;
            std::vector<std::vector<int>> cells;
            for (const VertexSet& cell : rep.pi.cells) cells.push_back(cell.members());
            for (ReplayFinding& rf : rep.findings) {
                Finding f = base_finding(std::move(rf.check), std::move(rf.predicate), rf.critical,
                                         std::move(rf.detail));
                f.cell = rf.cell;
                f.column = rf.column;
                f.witness = std::move(rf.witness);
                f.partition = cells;
                rec.findings.push_back(std::move(f));
            }
        }
    } catch (const std::exception& e) {
        skip_all_checks(rec);
        rec.findings.clear();
        return skip(std::string("error: ") + e.what());
    }
    return rec;
}

int default_worker_count() {
    if (const char* env = std::getenv("SEMITOTAL_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

ScanSummary summarize(const std::vector<InstanceRecord>& records) {
    ScanSummary s;
    s.records = static_cast<int>(records.size());
    for (const auto& name : replay_check_names()) s.checks[name];
    for (const InstanceRecord& rec : records) {
        if (rec.skipped()) {
            ++s.skipped;
            continue;
        }
        s.thm1_violations += rec.thm1_holds ? 0 : 1;
        s.thm2_violations += rec.thm2_holds ? 0 : 1;
        s.findings += static_cast<int>(rec.findings.size());
        s.critical_findings += rec.critical_findings();
        if (!s.min_ratio || rec.ratio < *s.min_ratio) {
            s.min_ratio = rec.ratio;
            s.min_ratio_id = rec.id;
        }
        for (const auto& [name, status] : rec.replay) {
            CheckTally& t = s.checks[name];
            if (status == "pass")
                ++t.pass;
            else if (status == "fail")
                ++t.fail;
            else
                ++t.skipped;
        }
    }
    return s;
}

ScanResult scan(const std::vector<FactorDescriptor>& left, const std::vector<FactorDescriptor>& right,
                const VerifyOptions& options, int workers) {
    ScanResult result;
    const std::size_t total = left.size() * right.size();
    result.records.resize(total);
    if (total > 0) {
        SolveCache cache;
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < total; i = next++)
                result.records[i] = verify_pair(left[i / right.size()], right[i % right.size()], options, &cache);
        };
        const int count = std::clamp(workers > 0 ? workers : default_worker_count(), 1, static_cast<int>(total));
        std::vector<std::jthread> pool;
        for (int t = 1; t < count; ++t) pool.emplace_back(work);
        work();
    }
    result.summary = summarize(result.records);
    return result;
}

HuntResult hunt_conjecture(const std::vector<InstanceRecord>& records, Rational threshold, std::size_t closest_count) {
    HuntResult out;
    out.threshold = threshold;
    struct Ranked {
        __int128 gap_num;
        __int128 gap_den;
        std::size_t order;
    };
    std::vector<Ranked> ranked;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const InstanceRecord& rec = records[i];
        if (rec.skipped()) continue;
        if (rec.ratio < threshold) out.counterexamples.push_back({rec.id, rec.ratio});
        __int128 diff = static_cast<__int128>(rec.ratio.num) * threshold.den -
                        static_cast<__int128>(threshold.num) * rec.ratio.den;
        ranked.push_back({diff < 0 ? -diff : diff, static_cast<__int128>(rec.ratio.den) * threshold.den, i});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        return a.gap_num * b.gap_den < b.gap_num * a.gap_den;
    });
    for (std::size_t i = 0; i < ranked.size() && i < closest_count; ++i) {
        const InstanceRecord& rec = records[ranked[i].order];
        out.closest.push_back({rec.id, rec.ratio});
    }
    return out;
}

HuntResult hunt_conjecture(const std::vector<FactorDescriptor>& left, const std::vector<FactorDescriptor>& right,
                           const VerifyOptions& options, Rational threshold, std::size_t closest_count) {
    return hunt_conjecture(scan(left, right, options).records, threshold, closest_count);
}

}  // namespace semitotal
