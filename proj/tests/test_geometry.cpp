#include "doctest.h"

#include "kedge/error.hpp"
#include "kedge/geometry.hpp"

using namespace kedge;

namespace {
Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }
}

TEST_CASE("orientation predicate") {
    CHECK(orient_sign(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient_sign(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
    CHECK(orient_sign(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
}

TEST_CASE("general position validation") {
    PointSet ok;
    ok.pts = {pt(0, 0), pt(1, 0), pt(0, 1)};
    CHECK_NOTHROW(validate_general_position(ok));

    PointSet dup;
    dup.pts = {pt(0, 0), pt(1, 0), pt(0, 0)};
    CHECK_THROWS_AS(validate_general_position(dup), Error);

    PointSet col;
    col.pts = {pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 5)};
    CHECK_THROWS_AS(validate_general_position(col), Error);
}

TEST_CASE("parabola diagonals cross once with known parameters") {
    // points (i, i^2) for i = 1..4; segments 1->3 and 2->4
    std::vector<Point> pts = {pt(1, 1), pt(2, 4), pt(3, 9), pt(4, 16)};
    auto hits = intersect_segments(pts, {{0, 2}, {1, 3}});
    REQUIRE(hits[0].size() == 1);
    REQUIRE(hits[1].size() == 1);
    CHECK(hits[0][0].other == 1);
    CHECK(hits[0][0].t == Rat(3, 4));
    CHECK(hits[0][0].sign == 1);  // 2->4 runs left across 1->3
    CHECK(hits[1][0].t == Rat(1, 4));
    CHECK(hits[1][0].sign == -1);
}

TEST_CASE("hull edges do not cross diagonals improperly") {
    std::vector<Point> pts = {pt(1, 1), pt(2, 4), pt(3, 9), pt(4, 16)};
    auto hits = intersect_segments(pts, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
    std::size_t total = 0;
    for (const auto& h : hits) total += h.size();
    CHECK(total == 2);  // one crossing, two records
}

TEST_CASE("three concurrent segments are rejected") {
    std::vector<Point> pts = {pt(0, 0), pt(4, 4), pt(0, 4), pt(4, 0), pt(1, 0), pt(3, 4)};
    CHECK_THROWS_AS(intersect_segments(pts, {{0, 1}, {2, 3}, {4, 5}}), Error);
}

TEST_CASE("segment through another's endpoint is rejected") {
    std::vector<Point> pts = {pt(0, 0), pt(2, 0), pt(1, -1), pt(1, 1), pt(1, 0), pt(3, 5)};
    CHECK_THROWS_AS(intersect_segments(pts, {{0, 1}, {2, 3}, {4, 5}}), Error);
}

TEST_CASE("ccw direction sort starts at +x") {
    std::vector<Point> dirs = {pt(0, -1), pt(1, 0), pt(-1, 0), pt(0, 1), pt(1, 1)};
    auto idx = sort_ccw(dirs);
    CHECK(idx == std::vector<int>{1, 4, 3, 2, 0});
}
