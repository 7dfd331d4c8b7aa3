#include "doctest.h"

#include "segvis/fixtures.hpp"
#include "segvis/polygon.hpp"

#include <random>

using namespace segvis;

namespace {
Point P(long x, long y) { return Point{Rat(x), Rat(y)}; }
}  // namespace

TEST_CASE("validate fixes clockwise orientation") {
    auto sq = validate_polygon({P(0, 0), P(0, 1), P(1, 1), P(1, 0)});  // CW input
    CHECK(sq.size() == 4);
    CHECK(sq.signed_area() == Rat(1));
}

TEST_CASE("validate rejects bad input") {
    CHECK_THROWS_AS(validate_polygon({P(0, 0), P(1, 1)}), PolygonError);
    // bow-tie
    CHECK_THROWS_AS(validate_polygon({P(0, 0), P(1, 1), P(1, 0), P(0, 1)}), PolygonError);
    // consecutive collinear triple
    CHECK_THROWS_AS(validate_polygon({P(0, 0), P(1, 0), P(2, 0), P(1, 1)}), PolygonError);
    try {
        validate_polygon({P(0, 0), P(1, 0), P(2, 0), P(1, 1)});
        CHECK(false);
    } catch (const PolygonError& e) {
        CHECK(e.kind == PolygonErrorKind::CollinearTriple);
        CHECK(e.index_a == 0);
        CHECK(e.index_c == 2);
    }
    try {
        validate_polygon({P(0, 0), P(1, 1), P(1, 0), P(0, 1)});
        CHECK(false);
    } catch (const PolygonError& e) {
        CHECK(e.kind == PolygonErrorKind::NotSimple);
    }
}

TEST_CASE("point containment in unit square") {
    auto sq = fixture_square();
    CHECK(point_in_polygon(sq, {Rat(1, 2), Rat(1, 2)}) == Containment::Inside);
    CHECK(point_in_polygon(sq, {Rat(0), Rat(1, 2)}) == Containment::OnBoundary);
    CHECK(point_in_polygon(sq, {Rat(2), Rat(0)}) == Containment::Outside);
    CHECK(point_in_polygon(sq, {Rat(1), Rat(1)}) == Containment::OnBoundary);
}

namespace {
// Independent winding-number containment for cross-checking.
bool winding_inside(const SimplePolygon& poly, const Point& p) {
    long w = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly.vertex(i);
        const Point& b = poly.vertex(poly.next(i));
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) == Orientation::CCW) ++w;
        } else {
            if (b.y <= p.y && orient(a, b, p) == Orientation::CW) --w;
        }
    }
    return w != 0;
}
}  // namespace

TEST_CASE("crossing count agrees with winding number on random points") {
    auto shapes = {fixture_square(), fixture_lshape(), fixture_spike(), fixture_comb(8)};
    std::mt19937_64 rng(23);
    for (const auto& poly : shapes) {
        for (int it = 0; it < 1000; ++it) {
            Point p{Rat(static_cast<long>(rng() % 221) - 10, 10), Rat(static_cast<long>(rng() % 221) - 10, 10)};
            auto c = point_in_polygon(poly, p);
            if (c == Containment::OnBoundary) continue;
            CHECK((c == Containment::Inside) == winding_inside(poly, p));
        }
    }
}

TEST_CASE("segment containment") {
    auto sq = fixture_square();
    CHECK(segment_in_polygon(sq, {{Rat(1, 4), Rat(1, 4)}, {Rat(3, 4), Rat(3, 4)}}));
    CHECK(segment_in_polygon(sq, {P(0, 0), P(1, 1)}));  // diagonal, endpoints on boundary

    auto l = fixture_lshape();
    // Crosses the reflex notch: must be rejected.
    CHECK_FALSE(segment_in_polygon(l, {{Rat(3, 2), Rat(1, 2)}, {Rat(1, 2), Rat(3, 2)}}));
    // Grazing the reflex corner is allowed (closed containment).
    CHECK(segment_in_polygon(l, {P(2, 0), P(0, 2)}));
    CHECK(segment_in_polygon(l, {{Rat(1, 2), Rat(1, 2)}, {Rat(3, 2), Rat(1, 2)}}));
}

TEST_CASE("segment containment implies midpoint containment") {
    auto shapes = {fixture_lshape(), fixture_spike()};
    std::mt19937_64 rng(5);
    for (const auto& poly : shapes) {
        for (int it = 0; it < 300; ++it) {
            Point a{Rat(static_cast<long>(rng() % 200), 20), Rat(static_cast<long>(rng() % 200), 20)};
            Point b{Rat(static_cast<long>(rng() % 200), 20), Rat(static_cast<long>(rng() % 200), 20)};
            if (a == b) continue;
            if (segment_in_polygon(poly, {a, b}))
                CHECK(point_in_polygon(poly, midpoint(a, b)) != Containment::Outside);
        }
    }
}

TEST_CASE("polygon text format round-trip") {
    std::string text = "# comment\n4\n0 0\n1 0\n1 1\n0 1\n";
    auto sq = read_polygon_text(text);
    CHECK(sq.size() == 4);
    auto again = read_polygon_text(polygon_to_text(sq));
    CHECK(again.vertices() == sq.vertices());

    CHECK_THROWS(read_polygon_text("3\n0 0\n1 0\n"));
    auto rat = read_polygon_text("3\n0 0\n5/2 0.5\n1 2\n");
    CHECK(rat.vertex(1).x == Rat(5, 2));
    CHECK(rat.vertex(1).y == Rat(1, 2));
}
