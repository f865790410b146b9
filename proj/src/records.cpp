#include "semitotal/records.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "semitotal/errors.hpp"

namespace semitotal {

using nlohmann::json;

std::string tool_version() { return SEMITOTAL_VERSION; }

json to_json(const Finding& f) {
    return json{{"check", f.check},
                {"predicate", f.predicate},
                {"critical", f.critical},
                {"detail", f.detail},
                {"cell", f.cell},
                {"column", f.column},
                {"witness", f.witness},
                {"graph6_g", f.graph6_g},
                {"graph6_h", f.graph6_h},
                {"product_set", f.product_set},
                {"partition", f.partition}};
}

Finding finding_from_json(const json& j) {
    Finding f;
    j.at("check").get_to(f.check);
    j.at("predicate").get_to(f.predicate);
    j.at("critical").get_to(f.critical);
    j.at("detail").get_to(f.detail);
    j.at("cell").get_to(f.cell);
    j.at("column").get_to(f.column);
    j.at("witness").get_to(f.witness);
    j.at("graph6_g").get_to(f.graph6_g);
    j.at("graph6_h").get_to(f.graph6_h);
    j.at("product_set").get_to(f.product_set);
    j.at("partition").get_to(f.partition);
    return f;
}

json to_json(const InstanceRecord& rec, bool include_timing) {
    json findings = json::array();
    for (const Finding& f : rec.findings) findings.push_back(to_json(f));
    json j{{"id", rec.id},
           {"left", rec.left},
           {"right", rec.right},
           {"graph6_g", rec.graph6_g},
           {"graph6_h", rec.graph6_h},
           {"n_g", rec.n_g},
           {"n_h", rec.n_h},
           {"status", rec.status},
           {"skip_reason", rec.skip_reason},
           {"gamma_t2_g", rec.gamma_t2_g},
           {"gamma_t2_h", rec.gamma_t2_h},
           {"rho_g", rec.rho_g},
           {"gamma_t2_prod", rec.gamma_t2_prod},
           {"bound_thm1", rec.bound_thm1},
           {"bound_thm2", rec.bound_thm2},
           {"thm1_holds", rec.thm1_holds},
           {"thm2_holds", rec.thm2_holds},
           {"ratio", {{"num", rec.ratio.num}, {"den", rec.ratio.den}}},
           {"product_set", rec.product_set},
           {"replay", rec.replay},
           {"claim2_pass", rec.claim2_pass},
           {"claim2_fail", rec.claim2_fail},
           {"t_checked", rec.t_checked},
           {"t_failed", rec.t_failed},
           {"findings", std::move(findings)}};
    if (include_timing) j["timing_us"] = rec.timing_us;
    return j;
}

InstanceRecord record_from_json(const json& j) {
    try {
        InstanceRecord rec;
        j.at("id").get_to(rec.id);
        j.at("left").get_to(rec.left);
        j.at("right").get_to(rec.right);
        j.at("graph6_g").get_to(rec.graph6_g);
        j.at("graph6_h").get_to(rec.graph6_h);
        j.at("n_g").get_to(rec.n_g);
        j.at("n_h").get_to(rec.n_h);
        j.at("status").get_to(rec.status);
        j.at("skip_reason").get_to(rec.skip_reason);
        j.at("gamma_t2_g").get_to(rec.gamma_t2_g);
        j.at("gamma_t2_h").get_to(rec.gamma_t2_h);
        j.at("rho_g").get_to(rec.rho_g);
        j.at("gamma_t2_prod").get_to(rec.gamma_t2_prod);
        j.at("bound_thm1").get_to(rec.bound_thm1);
        j.at("bound_thm2").get_to(rec.bound_thm2);
        j.at("thm1_holds").get_to(rec.thm1_holds);
        j.at("thm2_holds").get_to(rec.thm2_holds);
        rec.ratio = {j.at("ratio").at("num").get<long long>(), j.at("ratio").at("den").get<long long>()};
        j.at("product_set").get_to(rec.product_set);
        j.at("replay").get_to(rec.replay);
        j.at("claim2_pass").get_to(rec.claim2_pass);
        j.at("claim2_fail").get_to(rec.claim2_fail);
        j.at("t_checked").get_to(rec.t_checked);
        j.at("t_failed").get_to(rec.t_failed);
        for (const json& f : j.at("findings")) rec.findings.push_back(finding_from_json(f));
        if (j.contains("timing_us")) j.at("timing_us").get_to(rec.timing_us);
        return rec;
    } catch (const json::exception& e) {
        throw InputError(std::string("instance record: ") + e.what());
    }
}

json jsonl_header() {
    return json{{"schema", kRecordSchemaName}, {"schema_version", kRecordSchemaVersion}, {"tool_version", tool_version()}};
}

void write_jsonl(std::ostream& out, const std::vector<InstanceRecord>& records, bool include_timing) {
    out << jsonl_header().dump() << '\n';
    for (const InstanceRecord& rec : records) out << to_json(rec, include_timing).dump() << '\n';
}

std::vector<InstanceRecord> read_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("JSONL: missing header line");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw InputError(std::string("JSONL header: ") + e.what());
    }
    if (header.value("schema", "") != kRecordSchemaName)
        throw InputError("JSONL header: unexpected schema '" + header.value("schema", "") + "'");
    if (header.value("schema_version", -1) != kRecordSchemaVersion)
        throw InputError("JSONL header: unsupported schema version");
    std::vector<InstanceRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw InputError("JSONL line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c{"id",        "n_G",           "n_H",        "gamma_t2_G", "gamma_t2_H",
                                   "rho_G",     "gamma_t2_prod", "bound_thm1", "bound_thm2", "ratio_num",
                                   "ratio_den"};
        for (const auto& name : replay_check_names()) c.push_back(name);
        for (const char* extra : {"claim2_fail", "findings", "critical_findings", "status", "schema_version"})
            c.emplace_back(extra);
        return c;
    }();
    return columns;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<InstanceRecord>& records) {
    const auto& columns = csv_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\r\n";
    for (const InstanceRecord& rec : records) {
        std::vector<std::string> row{rec.id,
                                     std::to_string(rec.n_g),
                                     std::to_string(rec.n_h),
                                     std::to_string(rec.gamma_t2_g),
                                     std::to_string(rec.gamma_t2_h),
                                     std::to_string(rec.rho_g),
                                     std::to_string(rec.gamma_t2_prod),
                                     std::to_string(rec.bound_thm1),
                                     std::to_string(rec.bound_thm2),
                                     std::to_string(rec.ratio.num),
                                     std::to_string(rec.ratio.den)};
        for (const auto& name : replay_check_names()) {
            auto it = rec.replay.find(name);
            row.push_back(it == rec.replay.end() ? "skipped" : it->second);
        }
        row.push_back(std::to_string(rec.claim2_fail));
        row.push_back(std::to_string(rec.findings.size()));
        row.push_back(std::to_string(rec.critical_findings()));
        row.push_back(rec.status);
        row.push_back(std::to_string(kCsvSchemaVersion));
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\r\n";
    }
}

std::vector<CsvRow> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    char c = 0;
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        table.push_back(std::move(row));
        row.clear();
    };
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            if (field_started && !field.empty()) throw InputError("CSV: stray quote inside unquoted field");
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get(c);
            end_row();
        } else if (c == '\n') {
            end_row();
        } else {
            field += c;
            field_started = true;
        }
    }
    if (quoted) throw InputError("CSV: unterminated quoted field");
    if (field_started || !row.empty()) end_row();

    std::vector<CsvRow> out;
    if (table.empty()) return out;
    const auto& header = table.front();
    for (std::size_t r = 1; r < table.size(); ++r) {
        if (table[r].size() == 1 && table[r][0].empty()) continue;
        if (table[r].size() != header.size())
            throw InputError("CSV: row " + std::to_string(r + 1) + " has " + std::to_string(table[r].size()) +
                             " fields, header has " + std::to_string(header.size()));
        CsvRow m;
        for (std::size_t i = 0; i < header.size(); ++i) m[header[i]] = table[r][i];
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::string get(const CsvRow& row, const std::string& key) {
    auto it = row.find(key);
    if (it == row.end()) throw InputError("CSV: missing column '" + key + "'");
    return it->second;
}

char status_glyph(const std::string& status) {
    if (status == "pass") return '+';
    if (status == "fail") return 'F';
    return '.';
}

}  // namespace

std::string render_report(const std::vector<CsvRow>& rows) {
    const std::vector<std::string> head{"id", "gG", "gH", "rhoG", "gGH", "thm1", "thm2", "ratio", "replay"};
    std::vector<std::vector<std::string>> body;
    int skipped = 0, thm1_viol = 0, thm2_viol = 0, findings = 0, critical = 0, claim2_fail = 0;
    std::optional<Rational> min_ratio;
    std::string min_id;
    for (const CsvRow& row : rows) {
        if (get(row, "status") != "ok") {
            ++skipped;
            body.push_back({get(row, "id"), "-", "-", "-", "-", "-", "-", "-", "skipped"});
            continue;
        }
        const int prod = std::stoi(get(row, "gamma_t2_prod"));
        const int b1 = std::stoi(get(row, "bound_thm1"));
        const int b2 = std::stoi(get(row, "bound_thm2"));
        thm1_viol += prod < b1 ? 1 : 0;
        thm2_viol += prod < b2 ? 1 : 0;
        findings += std::stoi(get(row, "findings"));
        critical += std::stoi(get(row, "critical_findings"));
        claim2_fail += std::stoi(get(row, "claim2_fail"));
        Rational ratio = Rational::make(std::stoll(get(row, "ratio_num")), std::stoll(get(row, "ratio_den")));
        if (!min_ratio || ratio < *min_ratio) {
            min_ratio = ratio;
            min_id = get(row, "id");
        }
        std::string flags;
        for (const auto& name : replay_check_names()) flags += status_glyph(get(row, name));
        body.push_back({get(row, "id"), get(row, "gamma_t2_G"), get(row, "gamma_t2_H"), get(row, "rho_G"),
                        std::to_string(prod), std::to_string(b1) + (prod < b1 ? "!" : ""),
                        std::to_string(b2) + (prod < b2 ? "!" : ""), ratio.to_string(), flags});
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].size();
    for (const auto& r : body)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            out << r[i];
            if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << '\n';
    };
    emit(head);
    for (const auto& r : body) emit(r);
    out << "\nreplay columns: ";
    for (const auto& name : replay_check_names()) out << name << ' ';
    out << "(+ pass, F fail, . skipped)\n";
    out << "records: " << rows.size() << " (skipped " << skipped << ")\n";
    out << "min ratio: " << (min_ratio ? min_ratio->to_string() + " at " + min_id : std::string("n/a")) << '\n';
    out << "thm1 violations: " << thm1_viol << "\nthm2 violations: " << thm2_viol << '\n';
    out << "findings: " << findings << " (critical " << critical << ", claim2 cell failures " << claim2_fail << ")\n";
    return out.str();
}

std::string format_summary(const ScanSummary& s) {
    std::ostringstream out;
    out << "records: " << s.records << " (skipped " << s.skipped << ")\n";
    out << "min ratio: " << (s.min_ratio ? s.min_ratio->to_string() + " at " + s.min_ratio_id : std::string("n/a"))
        << '\n';
    out << "thm1 violations: " << s.thm1_violations << "\nthm2 violations: " << s.thm2_violations << '\n';
    out << "findings: " << s.findings << " (critical " << s.critical_findings << ")\n";
    for (const auto& [name, t] : s.checks)
        out << "  " << name << ": pass " << t.pass << ", fail " << t.fail << ", skipped " << t.skipped << '\n';
    return out.str();
}

}  // namespace semitotal
