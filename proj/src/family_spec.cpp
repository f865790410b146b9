#include "semitotal/family_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semitotal/errors.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"

namespace semitotal {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

double parse_probability(std::string_view text) {
    // std::from_chars for double is missing on older libstdc++.
    std::string s(text);
    std::size_t used = 0;
    double p = 0;
    try {
        p = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw InputError("invalid probability '" + s + "'");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1], got " + s);
    return p;
}

std::pair<int, int> parse_range(std::string_view text) {
    auto dash = text.find('-');
    int lo = parse_number<int>(text.substr(0, dash), "vertex count");
    int hi = dash == std::string_view::npos ? lo : parse_number<int>(text.substr(dash + 1), "vertex count");
    if (lo > hi) throw InputError("empty range " + std::string(text));
    return {lo, hi};
}

std::string random_label(int n, double p, std::uint64_t seed) {
    std::ostringstream out;
    out << "random:" << n << ":" << p << ":" << seed;
    return out.str();
}

void append_family(std::vector<FactorDescriptor>& out, Family family, int lo, int hi, double p,
                   const std::vector<std::uint64_t>& seeds) {
    for (int n = lo; n <= hi; ++n) {
        if (family == Family::Random) {
            for (std::uint64_t seed : seeds) out.push_back({random_label(n, p, seed), random_graph(n, p, seed)});
        } else {
            out.push_back({std::string(family_name(family)) + ":" + std::to_string(n), generate(family, n)});
        }
    }
}

void append_graph6_file(std::vector<FactorDescriptor>& out, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph6 file '" + path + "'");
    std::string line;
    int line_no = 0;
    const std::size_t before = out.size();
    while (std::getline(in, line)) {
        ++line_no;
        auto body = trim(line);
        if (body.empty()) continue;
        try {
            out.push_back({"file:" + path + ":" + std::to_string(line_no), parse_graph6(body)});
        } catch (const Graph6Error& e) {
            throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (out.size() == before) throw InputError("graph6 file '" + path + "' holds no graphs");
}

void append_item(std::vector<FactorDescriptor>& out, std::string_view item) {
    item = trim(item);
    if (item.empty()) throw InputError("empty factor descriptor");
    if (item.starts_with("g6:")) {
        out.push_back({"g6", parse_graph6(item.substr(3))});
        return;
    }
    if (item.starts_with("file:")) {
        append_graph6_file(out, std::string(item.substr(5)));
        return;
    }
    auto parts = split(item, ':');
    auto family = family_from_name(parts[0]);
    if (!family) throw InputError("unknown family '" + std::string(parts[0]) + "'");
    if (*family == Family::Random) {
        if (parts.size() != 4) throw InputError("random descriptor must be random:n:p:seed, got '" + std::string(item) + "'");
        auto [lo, hi] = parse_range(parts[1]);
        append_family(out, *family, lo, hi, parse_probability(parts[2]),
                      {parse_number<std::uint64_t>(parts[3], "seed")});
        return;
    }
    if (parts.size() != 2) throw InputError("descriptor must be name:n or name:lo-hi, got '" + std::string(item) + "'");
    auto [lo, hi] = parse_range(parts[1]);
    append_family(out, *family, lo, hi, 0.0, {});
}

std::vector<FactorDescriptor> factors_from_json(const nlohmann::json& list) {
    if (!list.is_array()) throw InputError("factor list must be a JSON array");
    std::vector<FactorDescriptor> out;
    for (const auto& entry : list) {
        if (!entry.is_object()) throw InputError("factor entry must be a JSON object");
        if (entry.contains("graph6_file")) {
            append_graph6_file(out, entry.at("graph6_file").get<std::string>());
            continue;
        }
        if (entry.contains("graph6")) {
            out.push_back({"g6", parse_graph6(entry.at("graph6").get<std::string>())});
            continue;
        }
        const auto name = entry.at("family").get<std::string>();
        auto family = family_from_name(name);
        if (!family) throw InputError("unknown family '" + name + "'");
        int lo = 0, hi = 0;
        const auto& n = entry.at("n");
        if (n.is_array()) {
            if (n.size() != 2) throw InputError("\"n\" range must be [lo, hi]");
            lo = n[0].get<int>();
            hi = n[1].get<int>();
        } else {
            lo = hi = n.get<int>();
        }
        if (lo > hi) throw InputError("empty range in family '" + name + "'");
        double p = entry.value("p", 0.0);
        if (*family == Family::Random && !(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1]");
        std::vector<std::uint64_t> seeds;
        if (entry.contains("seeds")) seeds = entry.at("seeds").get<std::vector<std::uint64_t>>();
        if (entry.contains("seed")) seeds.push_back(entry.at("seed").get<std::uint64_t>());
        if (*family == Family::Random && seeds.empty()) throw InputError("random family needs \"seed\" or \"seeds\"");
        append_family(out, *family, lo, hi, p, seeds);
    }
    return out;
}

}  // namespace

std::vector<FactorDescriptor> parse_factor_list(std::string_view text) {
    std::vector<FactorDescriptor> out;
    for (auto item : split(text, ',')) append_item(out, item);
    return out;
}

FamilySpec parse_family_spec(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    std::istringstream tokens{std::string(text)};
    std::string token;
    std::string left, right;
    bool seen_x = false;
    while (tokens >> token) {
        if (token == "x") {
            if (seen_x) throw InputError("family spec has more than one 'x' separator");
            seen_x = true;
            continue;
        }
        (seen_x ? right : left) += token;
    }
    if (seen_x && (left.empty() || right.empty())) throw InputError("family spec needs a list on both sides of 'x'");
    FamilySpec spec;
    spec.left = parse_factor_list(left);
    spec.right = seen_x ? parse_factor_list(right) : spec.left;
    return spec;
}

FamilySpec parse_family_spec_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("family spec JSON: ") + e.what());
    }
    try {
        FamilySpec spec;
        if (doc.contains("factors")) {
            spec.left = factors_from_json(doc.at("factors"));
            spec.right = spec.left;
        } else {
            spec.left = factors_from_json(doc.at("left"));
            spec.right = factors_from_json(doc.at("right"));
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("family spec JSON: ") + e.what());
    }
}

FactorDescriptor parse_single_factor(std::string_view text) {
    auto list = parse_factor_list(text);
    if (list.size() != 1) throw InputError("'" + std::string(text) + "' must name exactly one graph");
    return std::move(list.front());
}

}  // namespace semitotal
