#pragma once

#include "segvis/rational.hpp"

#include <optional>
#include <utility>
#include <variant>

namespace segvis {

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Lexicographic (x, then y) order; total and exact.
inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of the cross product (b-a) x (c-a), computed exactly.
Orientation orient(const Point& a, const Point& b, const Point& c);

Rat cross(const Point& a, const Point& b, const Point& c);
Rat dot(const Point& a, const Point& b, const Point& c);

/// True iff p lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& p);

struct NoIntersection {};
struct PointIntersection {
    Point p;
};
struct OverlapIntersection {
    Point from;
    Point to;
};
using SegIntersection = std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

/// Exact classification of the intersection of two closed segments.
SegIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Intersection point of the supporting lines, if they are not parallel.
std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff closed segments [a,b] and [c,d] share at least one point.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff the open interiors cross at a single point (proper crossing).
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

inline Point midpoint(const Point& a, const Point& b) {
    return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
}

}  // namespace segvis
