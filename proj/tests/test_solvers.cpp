#include <doctest.h>

#include "semitotal/errors.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"
#include "semitotal/solvers.hpp"
#include "support/convert.hpp"

using namespace semitotal;
using support::kAllKinds;

namespace {

VertexSet set_of(const Graph& g, std::vector<int> members) { return VertexSet(g.order(), members); }

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("predicates on small graphs") {
    Graph c4 = cycle_graph(4), p3 = path_graph(3), p5 = path_graph(5), c6 = cycle_graph(6);
    CHECK(is_total_dominating(c4, set_of(c4, {0, 1})));
    CHECK_FALSE(is_total_dominating(c4, set_of(c4, {0})));
    CHECK_FALSE(is_total_dominating(p3, set_of(p3, {1})));
    CHECK(is_total_dominating(p3, set_of(p3, {0, 1})));
    CHECK(is_dominating(p3, set_of(p3, {1})));

    CHECK(is_semitotal_dominating(p5, set_of(p5, {1, 3})));
    CHECK(is_semitotal_dominating(c4, set_of(c4, {0, 2})));
    CHECK_FALSE(is_semitotal_dominating(c6, set_of(c6, {0, 3})));
    CHECK_FALSE(is_semitotal_dominating(complete_graph(5), set_of(complete_graph(5), {2})));

    Graph p4 = path_graph(4), k4 = complete_graph(4);
    CHECK(is_two_packing(p4, set_of(p4, {0, 3})));
    CHECK_FALSE(is_two_packing(k4, set_of(k4, {1, 2})));
    CHECK(is_two_packing(k4, set_of(k4, {})));
    CHECK(is_two_packing(k4, set_of(k4, {3})));
}

TEST_CASE("isolated vertices are rejected for domination kinds") {
    Graph g = parse_graph6("A?");
    CHECK_THROWS_AS(is_semitotal_dominating(g, g.all_vertices()), PreconditionError);
    CHECK_THROWS_AS(solve_oracle(g, Invariant::GammaT2), PreconditionError);
    CHECK_THROWS_AS(solve_bnb(g, Invariant::Gamma), PreconditionError);
    CHECK(solve_bnb(g, Invariant::Rho).value == 2);
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(solve_oracle(path_graph(21), Invariant::Gamma), OracleGuardError);
    CHECK_THROWS_AS(enumerate_min_semitotal_sets(path_graph(21)), OracleGuardError);
    CHECK(solve_bnb(path_graph(21), Invariant::GammaT2).value > 0);
}

TEST_CASE("small closed-form values") {
    auto r = solve_oracle(path_graph(2), Invariant::GammaT2);
    CHECK(r.value == 2);
    CHECK(r.witness.members() == std::vector<int>{0, 1});
    CHECK(solve_oracle(cycle_graph(4), Invariant::Rho).value == 1);
    CHECK(solve_bnb(star_graph(6), Invariant::GammaT2).value == 2);
    CHECK(solve_bnb(cartesian_product(path_graph(2), path_graph(2)).graph(), Invariant::GammaT2).value == 2);
    CHECK(solve_bnb(cycle_graph(4), Invariant::GammaT2).value == 2);
}

TEST_CASE("fixtures agree with the reference enumerator") {
    struct Fixture {
        const char* name;
        Graph g;
        int gamma, gamma_t, gamma_t2, rho;
        std::vector<int> t2_witness;
    };
    const std::vector<Fixture> fixtures{
        {"C6", cycle_graph(6), 2, 4, 3, 2, {0, 1, 3}},
        {"P5", path_graph(5), 2, 3, 2, 2, {1, 3}},
        {"K1,5", star_graph(6), 1, 2, 2, 1, {0, 1}},
        {"P4", path_graph(4), 2, 2, 2, 2, {0, 2}},
        {"P4xP2", cartesian_product(path_graph(4), path_graph(2)).graph(), 3, 4, 3, 2, {0, 4, 5}},
        {"C6xP3", cartesian_product(cycle_graph(6), path_graph(3)).graph(), 5, 6, 5, 4, {0, 2, 7, 10, 13}},
        {"K3xK3", cartesian_product(complete_graph(3), complete_graph(3)).graph(), 3, 3, 3, 1, {0, 1, 2}},
    };
    for (const auto& f : fixtures) {
        INFO(f.name);
        const int expected[] = {f.gamma, f.gamma_t, f.gamma_t2, f.rho};
        const brute::Graph ref = support::to_brute(f.g);
        for (int i = 0; i < 4; ++i) {
            const Invariant kind = kAllKinds[i];
            CHECK(brute::solve(ref, support::to_brute(kind)).value == expected[i]);
            CHECK(solve_oracle(f.g, kind).value == expected[i]);
            CHECK(solve_bnb(f.g, kind).value == expected[i]);
            CHECK(solve_oracle(f.g, kind).witness.members() == brute::solve(ref, support::to_brute(kind)).witness);
        }
        CHECK(solve_oracle(f.g, Invariant::GammaT2).witness.members() == f.t2_witness);
    }
}

TEST_CASE("minimum semi-total set lists") {
    CHECK(enumerate_min_semitotal_sets(path_graph(2)) == std::vector<VertexSet>{VertexSet(2, {0, 1})});
    CHECK(enumerate_min_semitotal_sets(cycle_graph(4)).size() == 6);

    auto c6 = enumerate_min_semitotal_sets(cycle_graph(6));
    CHECK(c6.size() == 14);
    std::vector<std::vector<int>> listed;
    for (const auto& s : c6) listed.push_back(s.members());
    CHECK(listed == brute::optimal_sets(brute::cycle(6), brute::Kind::GammaT2));
    CHECK(std::find(listed.begin(), listed.end(), std::vector<int>{0, 2, 4}) != listed.end());
    CHECK(std::find(listed.begin(), listed.end(), std::vector<int>{0, 1, 3}) != listed.end());

    std::vector<std::vector<int>> p4;
    for (const auto& s : enumerate_min_semitotal_sets(path_graph(4))) p4.push_back(s.members());
    CHECK(p4 == std::vector<std::vector<int>>{{0, 2}, {1, 2}, {1, 3}});
}

TEST_CASE("property: oracle and branch-and-bound agree on connected graphs up to six vertices") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (Invariant kind : kAllKinds) {
                const auto o = solve_oracle(g, kind);
                const auto b = solve_bnb(g, kind);
                REQUIRE(o.value == b.value);
                REQUIRE(satisfies(g, kind, b.witness));
            }
}

TEST_CASE("property: branch-and-bound matches the reference on random graphs") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 6 + static_cast<int>(seed % 9);
        const double p = 0.15 + 0.05 * static_cast<double>(seed % 8);
        Graph g = random_graph(n, p, seed);
        if (!is_isolate_free(g)) continue;
        const brute::Graph ref = support::to_brute(g);
        for (Invariant kind : kAllKinds) {
            INFO(emit_graph6(g), " ", invariant_name(kind));
            REQUIRE(solve_bnb(g, kind).value == brute::solve(ref, support::to_brute(kind)).value);
        }
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("property: ordering chain, packing bound and witness minimality") {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 6; ++n)
        for (Graph& g : connected_graphs(n)) graphs.push_back(std::move(g));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8 + static_cast<int>(seed % 10), 0.3, seed);
        if (is_isolate_free(g)) graphs.push_back(std::move(g));
    }
    for (const Graph& g : graphs) {
        const int gamma = solve_bnb(g, Invariant::Gamma).value;
        const int gamma_t = solve_bnb(g, Invariant::GammaT).value;
        const auto t2 = solve_bnb(g, Invariant::GammaT2);
        const int rho = solve_bnb(g, Invariant::Rho).value;
        REQUIRE(gamma <= t2.value);
        REQUIRE(t2.value <= gamma_t);
        REQUIRE(rho <= gamma);
        REQUIRE(t2.value >= 2);
        for (Invariant kind : {Invariant::Gamma, Invariant::GammaT, Invariant::GammaT2}) {
            const auto r = solve_bnb(g, kind);
            REQUIRE(satisfies(g, kind, r.witness));
            for (int v : r.witness) {
                VertexSet smaller = r.witness;
                smaller.erase(v);
                REQUIRE_FALSE(satisfies(g, kind, smaller));
            }
        }
        const auto packing = solve_bnb(g, Invariant::Rho).witness;
        REQUIRE(is_two_packing(g, packing));
    }
}

TEST_CASE("disconnected graphs") {
    using E = std::vector<std::pair<int, int>>;
    Graph two_edges = Graph::from_edge_list(4, E{{0, 1}, {2, 3}});
    CHECK(solve_bnb(two_edges, Invariant::GammaT2).value == 4);
    CHECK(solve_bnb(two_edges, Invariant::Gamma).value == 2);
    CHECK(solve_bnb(two_edges, Invariant::Rho).value == 2);
}

TEST_CASE("names") {
    CHECK(invariant_from_name("gamma_t2") == Invariant::GammaT2);
    CHECK_FALSE(invariant_from_name("gamma_x").has_value());
    CHECK(method_name(Method::Oracle) == "oracle");
}

}
