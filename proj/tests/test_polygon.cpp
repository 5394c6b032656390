#include <catch2/catch.hpp>

#include "hn/core/polygon.hpp"
#include "hn/rational.hpp"

using namespace hn;

TEST_CASE("rational arithmetic is reduced, ordered and overflow-checked") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-3, -6) == Rational(1, 2));
    REQUIRE(Rational(3, -6) == Rational(-1, 2));
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-5) < Rational(-4, 1));
    REQUIRE(Rational(7, 3).str() == "7/3");
    REQUIRE(Rational(0).str() == "0/1");
    REQUIRE_THROWS_AS(Rational(1, 0), InvalidInput);
    REQUIRE_THROWS_AS(Rational(INT64_MAX, 1) + Rational(INT64_MAX, 1), ArithmeticOverflow);
}

TEST_CASE("polygon construction validates concavity") {
    PolygonFn ok({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(1)}});
    REQUIRE(ok.max_x() == 2);
    REQUIRE(ok.end_y() == Rational(1));
    REQUIRE_THROWS_AS(PolygonFn({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(1)}}), InvalidInput);
    REQUIRE_THROWS_AS(PolygonFn({{1, Rational(0)}, {2, Rational(1)}}), InvalidInput);
}

TEST_CASE("filtration polygon sorts slopes nonincreasing") {
    // slopes (0, 1) with widths (1, 1) sort to (1, 0): vertices (0,0),(1,1),(2,1)
    PolygonFn p = filtration_polygon({{Rational(0), 1}, {Rational(1), 1}});
    REQUIRE(p == PolygonFn({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(1)}}));
    // single pair: one segment
    PolygonFn single = filtration_polygon({{Rational(-1, 2), 2}});
    REQUIRE(single == PolygonFn({{0, Rational(0)}, {2, Rational(-1)}}));
    // already-sorted input stays put, equal slopes merge
    PolygonFn merged = filtration_polygon({{Rational(1), 1}, {Rational(1), 2}, {Rational(0), 1}});
    REQUIRE(merged == PolygonFn({{0, Rational(0)}, {3, Rational(3)}, {4, Rational(3)}}));
}

TEST_CASE("polygon_leq decided exactly at merged breakpoints") {
    PolygonFn p({{0, Rational(0)}, {2, Rational(0)}});
    PolygonFn q({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(0)}});
    REQUIRE(polygon_leq(p, q));
    REQUIRE_FALSE(polygon_leq(q, p));
    REQUIRE(polygon_leq(p, p)); // reflexivity
    // different domains compare on the common part
    PolygonFn longer({{0, Rational(0)}, {3, Rational(0)}});
    REQUIRE(polygon_leq(p, longer));
    REQUIRE(polygon_leq(longer, q));
}

TEST_CASE("polygon_join concatenates with translation") {
    PolygonFn flat({{0, Rational(0)}, {1, Rational(0)}});
    PolygonFn down({{0, Rational(0)}, {1, Rational(-1)}});
    PolygonFn joined = polygon_join(flat, down);
    REQUIRE(joined == PolygonFn({{0, Rational(0)}, {1, Rational(0)}, {2, Rational(-1)}}));

    PolygonFn up2({{0, Rational(0)}, {1, Rational(2)}});
    REQUIRE(polygon_join(up2, flat) ==
            PolygonFn({{0, Rational(0)}, {1, Rational(2)}, {2, Rational(2)}}));

    // equal slopes merge into a single segment
    REQUIRE(polygon_join(flat, flat) == PolygonFn({{0, Rational(0)}, {2, Rational(0)}}));

    REQUIRE_THROWS_AS(polygon_join(down, up2), InvalidInput);
}

TEST_CASE("upper convex hull reproduces the polygon of scattered endpoints") {
    // points from fixture A: lines (1,1), (1,0), (1,0) and the plane (2,1)
    PolygonFn hull = upper_convex_hull({{1, Rational(1)}, {1, Rational(0)}, {1, Rational(0)}, {2, Rational(1)}});
    REQUIRE(hull == PolygonFn({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(1)}}));
    // collinear interior points are absorbed
    PolygonFn line = upper_convex_hull({{1, Rational(1)}, {2, Rational(2)}, {3, Rational(3)}});
    REQUIRE(line == PolygonFn({{0, Rational(0)}, {3, Rational(3)}}));
}

TEST_CASE("polygon evaluation is exact at rational points") {
    PolygonFn p({{0, Rational(0)}, {1, Rational(1)}, {3, Rational(0)}});
    REQUIRE(p.eval(Rational(1, 2)) == Rational(1, 2));
    REQUIRE(p.eval(Rational(2)) == Rational(1, 2));
    REQUIRE(p.eval(Rational(3)) == Rational(0));
    REQUIRE_THROWS_AS(p.eval(Rational(4)), InvalidInput);
}
