#include "segvis/geometry.hpp"

#include <algorithm>

namespace segvis {

Rat cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rat dot(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y);
}

Orientation orient(const Point& a, const Point& b, const Point& c) {
    int s = sign(cross(a, b, c));
    if (s > 0) return Orientation::CCW;
    if (s < 0) return Orientation::CW;
    return Orientation::Collinear;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != Orientation::Collinear) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rat dx1 = b.x - a.x, dy1 = b.y - a.y;
    Rat dx2 = d.x - c.x, dy2 = d.y - c.y;
    Rat denom = dx1 * dy2 - dy1 * dx2;
    if (denom == 0) return std::nullopt;
    Rat t = ((c.x - a.x) * dy2 - (c.y - a.y) * dx2) / denom;
    return Point{a.x + t * dx1, a.y + t * dy1};
}

SegIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    Orientation o1 = orient(a, b, c);
    Orientation o2 = orient(a, b, d);
    Orientation o3 = orient(c, d, a);
    Orientation o4 = orient(c, d, b);

    if (o1 == Orientation::Collinear && o2 == Orientation::Collinear) {
        // Same supporting line: overlap is an interval (possibly a point).
        auto lo1 = lex_less(a, b) ? a : b, hi1 = lex_less(a, b) ? b : a;
        auto lo2 = lex_less(c, d) ? c : d, hi2 = lex_less(c, d) ? d : c;
        Point lo = lex_less(lo1, lo2) ? lo2 : lo1;
        Point hi = lex_less(hi1, hi2) ? hi1 : hi2;
        if (lex_less(hi, lo)) return NoIntersection{};
        if (lo == hi) return PointIntersection{lo};
        return OverlapIntersection{lo, hi};
    }

    if (static_cast<int>(o1) * static_cast<int>(o2) <= 0 &&
        static_cast<int>(o3) * static_cast<int>(o4) <= 0) {
        if (o1 == Orientation::Collinear) {
            if (on_segment(a, b, c)) return PointIntersection{c};
            return NoIntersection{};
        }
        if (o2 == Orientation::Collinear) {
            if (on_segment(a, b, d)) return PointIntersection{d};
            return NoIntersection{};
        }
        if (o3 == Orientation::Collinear) {
            if (on_segment(c, d, a)) return PointIntersection{a};
            return NoIntersection{};
        }
        if (o4 == Orientation::Collinear) {
            if (on_segment(c, d, b)) return PointIntersection{b};
            return NoIntersection{};
        }
        auto p = line_intersection(a, b, c, d);
        return PointIntersection{*p};
    }
    return NoIntersection{};
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    return !std::holds_alternative<NoIntersection>(segment_intersection({a, b}, {c, d}));
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    Orientation o1 = orient(a, b, c);
    Orientation o2 = orient(a, b, d);
    Orientation o3 = orient(c, d, a);
    Orientation o4 = orient(c, d, b);
    return static_cast<int>(o1) * static_cast<int>(o2) < 0 &&
           static_cast<int>(o3) * static_cast<int>(o4) < 0;
}

}  // namespace segvis
