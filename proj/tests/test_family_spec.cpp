#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "semitotal/errors.hpp"
#include "semitotal/family_spec.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"

using namespace semitotal;

namespace {

std::vector<std::string> labels(const std::vector<FactorDescriptor>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.label);
    return out;
}

}  // namespace

TEST_SUITE("family_spec") {

TEST_CASE("factor lists") {
    auto fs = parse_factor_list("paths:2-3, cycle:5,complete:1 ,stars:3");
    CHECK(labels(fs) == std::vector<std::string>{"path:2", "path:3", "cycle:5", "complete:1", "star:3"});
    CHECK(fs[2].graph == cycle_graph(5));
    auto r = parse_factor_list("random:5-6:0.5:7");
    CHECK(labels(r) == std::vector<std::string>{"random:5:0.5:7", "random:6:0.5:7"});
    CHECK(r[1].graph == random_graph(6, 0.5, 7));
    auto g = parse_factor_list("g6:DQc");
    CHECK(g[0].label == "g6");
    CHECK(emit_graph6(g[0].graph) == "DQc");
}

TEST_CASE("pair specs") {
    auto spec = parse_family_spec("paths:2-4 x cycles:3-5");
    CHECK(spec.left.size() == 3);
    CHECK(spec.right.size() == 3);
    CHECK(spec.right[0].label == "cycle:3");
    auto square = parse_family_spec("complete:2-4");
    CHECK(labels(square.left) == labels(square.right));
    auto empty = parse_family_spec("   ");
    CHECK(empty.left.empty());
    CHECK(empty.right.empty());
}

TEST_CASE("malformed specs") {
    CHECK_THROWS_AS(parse_family_spec("paths:4-2"), InputError);
    CHECK_THROWS_AS(parse_family_spec("wheels:3"), InputError);
    CHECK_THROWS_AS(parse_family_spec("paths:2 x"), InputError);
    CHECK_THROWS_AS(parse_family_spec("paths:2 x paths:3 x paths:4"), InputError);
    CHECK_THROWS_AS(parse_factor_list("random:5:1.5:1"), InputError);
    CHECK_THROWS_AS(parse_factor_list("random:5:0.5"), InputError);
    CHECK_THROWS_AS(parse_factor_list("paths:2,"), InputError);
    CHECK_THROWS_AS(parse_factor_list("paths:two"), InputError);
    CHECK_THROWS_AS(parse_factor_list("cycles:2"), InputError);
    CHECK_THROWS_AS(parse_factor_list("g6:A@"), Graph6Error);
    CHECK_THROWS_AS(parse_single_factor("paths:2-3"), InputError);
}

TEST_CASE("graph6 files") {
    const std::string path = "family_spec_test.g6";
    {
        std::ofstream out(path);
        out << "A_\n\nBw\n";
    }
    auto fs = parse_factor_list("file:" + path);
    CHECK(labels(fs) == std::vector<std::string>{"file:" + path + ":1", "file:" + path + ":3"});
    {
        std::ofstream out(path);
        out << "A_\nA@\n";
    }
    try {
        parse_factor_list("file:" + path);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_factor_list("file:/nonexistent/x.g6"), InputError);
}

TEST_CASE("JSON specs") {
    auto spec = parse_family_spec_json(R"({"left": [{"family": "path", "n": [2, 3]}, {"graph6": "Bw"}],
                                         "right": [{"family": "random", "n": 5, "p": 0.4, "seeds": [1, 2]}]})");
    CHECK(labels(spec.left) == std::vector<std::string>{"path:2", "path:3", "g6"});
    CHECK(labels(spec.right) == std::vector<std::string>{"random:5:0.4:1", "random:5:0.4:2"});
    auto square = parse_family_spec_json(R"({"factors": [{"family": "cycle", "n": 4}]})");
    CHECK(square.right.size() == 1);
    CHECK_THROWS_AS(parse_family_spec_json("{"), InputError);
    CHECK_THROWS_AS(parse_family_spec_json(R"({"left": []})"), InputError);
    CHECK_THROWS_AS(parse_family_spec_json(R"({"factors": [{"family": "random", "n": 4}]})"), InputError);
}

}
