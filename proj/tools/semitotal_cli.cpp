// Command-line front end. Exit codes: 0 ok, 2 usage/parse error,
// 3 precondition (isolated vertex, oracle guard), 4 bound violation or
// critical finding.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semitotal/errors.hpp"
#include "semitotal/family_spec.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"
#include "semitotal/harness.hpp"
#include "semitotal/proof.hpp"
#include "semitotal/records.hpp"
#include "semitotal/solvers.hpp"

namespace st = semitotal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitFinding = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_vertices(const std::vector<int>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "]";
}

st::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw UsageError("");
        long long den = 1;
        if (slash != std::string::npos) {
            den = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1) throw UsageError("");
        }
        if (den <= 0 || num < 0) throw UsageError("");
        return st::Rational::make(num, den);
    } catch (const std::exception&) {
        throw UsageError("invalid rational '" + text + "', expected a/b");
    }
}

struct SolveArgs {
    std::string family;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string graph6;
    std::string graph6_file;
    std::string kind = "gamma_t2";
    std::string method = "branch_and_bound";
};

int run_solve(const SolveArgs& a) {
    const int sources = !a.family.empty() + !a.graph6.empty() + !a.graph6_file.empty();
    if (sources != 1) throw UsageError("give exactly one graph source: --family, --graph6 or --graph6-file");
    auto kind = st::invariant_from_name(a.kind);
    if (!kind) throw UsageError("unknown invariant '" + a.kind + "'");
    st::Method method;
    if (a.method == "oracle")
        method = st::Method::Oracle;
    else if (a.method == "branch_and_bound" || a.method == "bnb")
        method = st::Method::BranchAndBound;
    else
        throw UsageError("unknown method '" + a.method + "'");

    st::Graph g = st::path_graph(1);
    if (!a.family.empty()) {
        auto family = st::family_from_name(a.family);
        if (!family) throw UsageError("unknown family '" + a.family + "'");
        g = st::generate(*family, a.n, a.p, a.seed);
    } else if (!a.graph6.empty()) {
        g = st::parse_graph6(a.graph6);
    } else {
        g = st::parse_single_factor("file:" + a.graph6_file).graph;
    }
    st::InvariantResult r = st::solve(g, *kind, method);
    std::cout << r.value << ' ' << format_vertices(r.witness.members()) << '\n';
    return kExitOk;
}

int run_product(const std::string& left, const std::string& right, int cap) {
    auto g = st::parse_single_factor(left);
    auto h = st::parse_single_factor(right);
    std::cout << st::emit_graph6(st::cartesian_product(g.graph, h.graph, cap).graph()) << '\n';
    return kExitOk;
}

st::FamilySpec load_spec(const std::string& spec, const std::string& spec_file) {
    if (!spec.empty() && !spec_file.empty()) throw UsageError("--spec and --spec-file are mutually exclusive");
    if (!spec_file.empty()) {
        std::string text = read_file(spec_file);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return st::parse_family_spec_json(text);
        return st::parse_family_spec(text);
    }
    return st::parse_family_spec(spec);
}

struct ScanArgs {
    std::string spec;
    std::string spec_file;
    std::string out;
    std::string csv;
    bool no_replay = false;
    bool no_timing = false;
    int workers = 0;
    int max_product = 49;
    int replay_max = 36;
};

st::VerifyOptions options_from(const ScanArgs& a) {
    st::VerifyOptions o;
    o.replay_proof = !a.no_replay;
    o.max_product_vertices = a.max_product;
    o.replay_max_vertices = a.replay_max;
    return o;
}

int run_scan(const ScanArgs& a) {
    if (a.out.empty()) throw UsageError("scan requires --out");
    st::FamilySpec spec = load_spec(a.spec, a.spec_file);
    st::ScanResult result = st::scan(spec.left, spec.right, options_from(a), a.workers);

    std::ofstream jsonl(a.out, std::ios::binary);
    if (!jsonl) throw UsageError("cannot write '" + a.out + "'");
    st::write_jsonl(jsonl, result.records, !a.no_timing);
    std::string csv_path = a.csv;
    if (csv_path.empty()) csv_path = std::filesystem::path(a.out).replace_extension(".csv").string();
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw UsageError("cannot write '" + csv_path + "'");
    st::write_csv(csv, result.records);

    std::cout << st::format_summary(result.summary);
    std::cout << "wrote " << a.out << " and " << csv_path << '\n';
    const bool flagged = result.summary.thm1_violations + result.summary.thm2_violations +
                             result.summary.critical_findings > 0;
    return flagged ? kExitFinding : kExitOk;
}

int run_verify_proof(const std::string& left, const std::string& right, int max_product) {
    auto g = st::parse_single_factor(left);
    auto h = st::parse_single_factor(right);
    st::VerifyOptions o;
    o.max_product_vertices = max_product;
    o.replay_max_vertices = max_product;
    st::InstanceRecord rec = st::verify_pair(g, h, o);
    if (rec.skipped()) {
        std::cerr << "skipped: " << rec.skip_reason << '\n';
        return rec.skip_reason.starts_with("factor has an isolated") ? kExitPrecondition : kExitUsage;
    }
    std::cout << "G = " << rec.left << " (" << rec.graph6_g << "), H = " << rec.right << " (" << rec.graph6_h
              << ")\n";
    std::cout << "gamma_t2(G)=" << rec.gamma_t2_g << " gamma_t2(H)=" << rec.gamma_t2_h << " rho(G)=" << rec.rho_g
              << " gamma_t2(G x H)=" << rec.gamma_t2_prod << " d=" << format_vertices(rec.product_set) << '\n';
    std::cout << "thm1 bound " << rec.bound_thm1 << (rec.thm1_holds ? " holds" : " VIOLATED") << ", thm2 bound "
              << rec.bound_thm2 << (rec.thm2_holds ? " holds" : " VIOLATED") << ", ratio "
              << rec.ratio.to_string() << "\n\n";

    std::size_t width = 5;
    for (const auto& name : st::replay_check_names()) width = std::max(width, name.size());
    std::cout << std::left << std::setw(static_cast<int>(width + 2)) << "check" << std::setw(9) << "status"
              << "findings\n";
    for (const auto& name : st::replay_check_names()) {
        int total = 0, critical = 0;
        for (const auto& f : rec.findings) {
            if (f.check != name) continue;
            ++total;
            critical += f.critical ? 1 : 0;
        }
        std::cout << std::setw(static_cast<int>(width + 2)) << name << std::setw(9) << rec.replay.at(name) << total;
        if (critical) std::cout << " (" << critical << " critical)";
        std::cout << '\n';
    }
    std::cout << "\nclaim2 cells: " << rec.claim2_pass << " pass, " << rec.claim2_fail
              << " fail; T columns: " << rec.t_checked << " checked, " << rec.t_failed << " failed\n";
    for (const auto& f : rec.findings) {
        std::cout << (f.critical ? "CRITICAL " : "note     ") << f.check << ": " << f.predicate;
        if (f.cell >= 0) std::cout << " cell=" << f.cell;
        if (f.column >= 0) std::cout << " column=" << f.column;
        if (!f.witness.empty()) std::cout << " witness=" << format_vertices(f.witness);
        std::cout << " -- " << f.detail << '\n';
    }
    return rec.bound_violation() || rec.critical_findings() > 0 ? kExitFinding : kExitOk;
}

int run_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::cout << st::render_report(st::read_csv(in));
    return kExitOk;
}

int run_hunt(const ScanArgs& a, const std::string& threshold, std::size_t closest) {
    st::FamilySpec spec = load_spec(a.spec, a.spec_file);
    st::VerifyOptions o = options_from(a);
    o.replay_proof = false;
    auto records = st::scan(spec.left, spec.right, o, a.workers).records;
    st::HuntResult hunt = st::hunt_conjecture(records, parse_rational(threshold), closest);
    std::cout << "threshold " << hunt.threshold.to_string() << ": " << hunt.counterexamples.size()
              << " instance(s) below\n";
    for (const auto& e : hunt.counterexamples) std::cout << "  below  " << e.ratio.to_string() << "  " << e.id << '\n';
    std::cout << "closest to threshold:\n";
    for (const auto& e : hunt.closest) std::cout << "  " << e.ratio.to_string() << "  " << e.id << '\n';
    return hunt.counterexamples.empty() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-total domination of Cartesian products: exact solvers and bound checks"};
    app.set_version_flag("--version", st::tool_version());
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Compute one invariant of one graph");
    auto* fam = solve->add_option("--family", solve_args.family, "path, cycle, complete, star or random");
    solve->add_option("--n", solve_args.n, "Number of vertices");
    solve->add_option("--p", solve_args.p, "Edge probability for random graphs");
    solve->add_option("--seed", solve_args.seed, "Seed for random graphs");
    auto* g6 = solve->add_option("--graph6", solve_args.graph6, "Graph as a graph6 string");
    auto* g6f = solve->add_option("--graph6-file", solve_args.graph6_file, "File holding one graph6 record");
    fam->excludes(g6)->excludes(g6f);
    g6->excludes(g6f);
    solve->add_option("--kind", solve_args.kind, "gamma, gamma_t, gamma_t2 or rho")->capture_default_str();
    solve->add_option("--method", solve_args.method, "oracle or branch_and_bound")->capture_default_str();

    std::string left, right;
    int product_cap = 4096;
    auto* product = app.add_subcommand("product", "Print the graph6 of a Cartesian product");
    product->add_option("--left", left, "Left factor, e.g. path:2 or g6:A_")->required();
    product->add_option("--right", right, "Right factor")->required();
    product->add_option("--cap", product_cap, "Maximum product order")->capture_default_str();

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Verify the bounds over a grid of factor pairs");
    auto* spec_opt = scan->add_option("--spec", scan_args.spec, "Family spec, e.g. \"paths:2-4 x cycles:3-5\"");
    auto* spec_file_opt = scan->add_option("--spec-file", scan_args.spec_file, "Family spec file (text or JSON)");
    spec_opt->excludes(spec_file_opt);
    scan->add_option("--out", scan_args.out, "JSONL output path")->required();
    scan->add_option("--csv", scan_args.csv, "CSV output path (default: --out with .csv)");
    scan->add_flag("--no-replay", scan_args.no_replay, "Skip the proof replay");
    scan->add_flag("--no-timing", scan_args.no_timing, "Omit timing fields from JSONL");
    scan->add_option("--workers", scan_args.workers, "Worker threads (default: SEMITOTAL_WORKERS or all cores)");
    scan->add_option("--max-product", scan_args.max_product, "Skip products above this order")->capture_default_str();
    scan->add_option("--replay-max", scan_args.replay_max, "Replay only products up to this order")
        ->capture_default_str();

    std::string vp_left, vp_right;
    int vp_cap = 36;
    auto* verify = app.add_subcommand("verify_proof", "Replay the one-third bound argument on one pair");
    verify->alias("verify-proof");
    verify->add_option("--left", vp_left, "Left factor")->required();
    verify->add_option("--right", vp_right, "Right factor")->required();
    verify->add_option("--max-product", vp_cap, "Maximum product order")->capture_default_str();

    std::string report_path;
    auto* report = app.add_subcommand("report", "Render a scan CSV as a text table");
    report->add_option("csv", report_path, "CSV written by scan")->required();

    ScanArgs hunt_args;
    std::string threshold = "1/2";
    std::size_t closest = 10;
    auto* hunt = app.add_subcommand("hunt", "List instances whose ratio falls below a threshold");
    auto* h_spec = hunt->add_option("--spec", hunt_args.spec, "Family spec");
    auto* h_spec_file = hunt->add_option("--spec-file", hunt_args.spec_file, "Family spec file");
    h_spec->excludes(h_spec_file);
    hunt->add_option("--threshold", threshold, "Ratio threshold a/b")->capture_default_str();
    hunt->add_option("--closest", closest, "How many nearest instances to list")->capture_default_str();
    hunt->add_option("--workers", hunt_args.workers, "Worker threads");
    hunt->add_option("--max-product", hunt_args.max_product, "Skip products above this order")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) return run_solve(solve_args);
        if (*product) return run_product(left, right, product_cap);
        if (*scan) return run_scan(scan_args);
        if (*verify) return run_verify_proof(vp_left, vp_right, vp_cap);
        if (*report) return run_report(report_path);
        if (*hunt) return run_hunt(hunt_args, threshold, closest);
    } catch (const st::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const st::OracleGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
