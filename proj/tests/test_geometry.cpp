#include "doctest.h"

#include "segvis/geometry.hpp"

#include <random>

using namespace segvis;

namespace {
Point P(long x, long y) { return Point{Rat(x), Rat(y)}; }
Point Pr(const char* x, const char* y) { return Point{parse_rat(x), parse_rat(y)}; }
}  // namespace

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rat("42") == Rat(42));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(parse_rat("1.25") == Rat(5, 4));
    CHECK(parse_rat("-0.5") == Rat(-1, 2));
    CHECK(parse_rat("7/4") == Rat(7, 4));
    CHECK(parse_rat("-7/4") == Rat(-7, 4));
    CHECK(rat_to_string(Rat(5, 4)) == "5/4");
    CHECK(rat_to_string(Rat(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("abc"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("orient basic cases") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
    CHECK(orient(P(0, 0), P(1, 0), P(2, 0)) == Orientation::Collinear);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 1)) == Orientation::CW);
}

TEST_CASE("orient antisymmetry and rotation invariance") {
    std::mt19937_64 rng(7);
    auto coord = [&] { return Rat(static_cast<long>(rng() % 2001) - 1000); };
    for (int it = 0; it < 500; ++it) {
        Point a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()};
        auto o = orient(a, b, c);
        CHECK(orient(b, c, a) == o);
        CHECK(orient(c, a, b) == o);
        CHECK(static_cast<int>(orient(b, a, c)) == -static_cast<int>(o));
        CHECK(static_cast<int>(orient(a, c, b)) == -static_cast<int>(o));
    }
}

TEST_CASE("segment intersection classification") {
    auto r = segment_intersection({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
    auto* pi = std::get_if<PointIntersection>(&r);
    REQUIRE(pi != nullptr);
    CHECK(pi->p == P(1, 1));

    CHECK(std::holds_alternative<NoIntersection>(
        segment_intersection({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)})));

    auto ov = segment_intersection({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
    auto* o = std::get_if<OverlapIntersection>(&ov);
    REQUIRE(o != nullptr);
    CHECK(o->from == P(1, 0));
    CHECK(o->to == P(2, 0));

    // Endpoint touch is a point intersection.
    auto t = segment_intersection({P(0, 0), P(1, 1)}, {P(1, 1), P(2, 0)});
    CHECK(std::holds_alternative<PointIntersection>(t));

    // Collinear disjoint.
    CHECK(std::holds_alternative<NoIntersection>(
        segment_intersection({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)})));
}

TEST_CASE("segment intersection is symmetric and point lies on both segments") {
    std::mt19937_64 rng(11);
    auto coord = [&] { return Rat(static_cast<long>(rng() % 41) - 20); };
    for (int it = 0; it < 800; ++it) {
        Segment s1{{coord(), coord()}, {coord(), coord()}};
        Segment s2{{coord(), coord()}, {coord(), coord()}};
        if (s1.a == s1.b || s2.a == s2.b) continue;
        auto r12 = segment_intersection(s1, s2);
        auto r21 = segment_intersection(s2, s1);
        CHECK(r12.index() == r21.index());
        if (auto* pi = std::get_if<PointIntersection>(&r12)) {
            CHECK(on_segment(s1.a, s1.b, pi->p));
            CHECK(on_segment(s2.a, s2.b, pi->p));
        }
    }
}

TEST_CASE("rational coordinates stay exact") {
    auto r = segment_intersection({Pr("0", "0"), Pr("1/3", "1/3")}, {Pr("0", "1/3"), Pr("1/3", "0")});
    auto* pi = std::get_if<PointIntersection>(&r);
    REQUIRE(pi != nullptr);
    CHECK(pi->p.x == Rat(1, 6));
    CHECK(pi->p.y == Rat(1, 6));
}
