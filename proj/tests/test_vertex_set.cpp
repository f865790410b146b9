#include <doctest.h>

#include <stdexcept>

#include "semitotal/vertex_set.hpp"

using semitotal::VertexSet;

TEST_SUITE("vertex_set") {

TEST_CASE("membership and iteration") {
    VertexSet s(130, {0, 64, 129, 5});
    CHECK(s.size() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.members() == std::vector<int>{0, 5, 64, 129});
    CHECK(s.next(6) == 64);
    CHECK(s.next(130) == 130);
    s.erase(64);
    CHECK(s.to_string() == "{0,5,129}");
    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 5, 129});
}

TEST_CASE("set algebra") {
    VertexSet a(8, {0, 1, 2}), b(8, {2, 3});
    CHECK((a | b).members() == std::vector<int>{0, 1, 2, 3});
    CHECK((a & b).members() == std::vector<int>{2});
    CHECK((a - b).members() == std::vector<int>{0, 1});
    CHECK(a.intersects(b));
    CHECK(VertexSet(8, {2}).is_subset_of(a));
    CHECK(VertexSet::full(8).size() == 8);
    CHECK(VertexSet(0).empty());
}

TEST_CASE("lexicographic order compares sorted member lists") {
    CHECK(VertexSet::lex_less(VertexSet(6, {0, 1, 3}), VertexSet(6, {0, 2})));
    CHECK(VertexSet::lex_less(VertexSet(6, {0, 1}), VertexSet(6, {0, 1, 2})));
    CHECK_FALSE(VertexSet::lex_less(VertexSet(6, {1}), VertexSet(6, {0, 5})));
}

TEST_CASE("bad input is rejected") {
    VertexSet s(4);
    CHECK_THROWS_AS(s.insert(4), std::out_of_range);
    CHECK_THROWS_AS(s.insert(-1), std::out_of_range);
    CHECK_THROWS_AS(s |= VertexSet(5), std::invalid_argument);
}

}
