#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "semitotal/errors.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"

using namespace semitotal;

namespace {

// Canonical form by brute force over all relabelings.
std::string brute_canonical(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) code += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool connected(const Graph& g) {
    for (int v = 1; v < g.order(); ++v)
        if (g.dist(0, v) == Graph::kUnreachable) return false;
    return true;
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("named families") {
    CHECK(path_graph(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cycle_graph(5).adjacent(0, 4));
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(star_graph(5).degree(0) == 4);
    CHECK(star_graph(5).max_degree() == 4);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(path_graph(0), InputError);
}

TEST_CASE("family names") {
    CHECK(family_from_name("paths") == Family::Path);
    CHECK(family_from_name("cycle") == Family::Cycle);
    CHECK(family_from_name("stars") == Family::Star);
    CHECK_FALSE(family_from_name("wheel").has_value());
    CHECK(family_name(Family::Complete) == "complete");
}

TEST_CASE("random graphs are seed-deterministic") {
    CHECK(random_graph(9, 0.5, 42) == random_graph(9, 0.5, 42));
    CHECK(random_graph(9, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(9, 1.0, 1).edge_count() == 36);
    int differing = 0;
    for (std::uint64_t s = 0; s < 10; ++s) differing += random_graph(9, 0.5, s) == random_graph(9, 0.5, s + 1) ? 0 : 1;
    CHECK(differing >= 9);
}

TEST_CASE("connected catalog counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("property: catalog members are connected and pairwise non-isomorphic") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const Graph& g : connected_graphs(n)) {
            REQUIRE(connected(g));
            REQUIRE(seen.insert(brute_canonical(g)).second);
        }
    }
}

}
