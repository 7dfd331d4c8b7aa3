#include "segvis/fixtures.hpp"

namespace segvis {

namespace {
Point P(long x, long y) { return Point{Rat(x), Rat(y)}; }
}  // namespace

SimplePolygon fixture_square() {
    return validate_polygon({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
}

SimplePolygon fixture_lshape() {
    return validate_polygon({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 2)});
}

SimplePolygon fixture_spike() {
    return validate_polygon(
        {P(0, 0), P(8, 0), P(9, 5), P(5, 7), P(4, 1), P(3, 7), P(1, 6), P(-1, 3)});
}

SimplePolygon fixture_comb(int k) {
    // Teeth rise from a jittered base line; jitters break collinearity.
    std::vector<Point> pts;
    pts.push_back(P(0, 0));
    pts.push_back(P(10 * k + 3, 1));
    auto jit = [](int i, int m) { return (i * 37 + 11) % m; };
    for (int i = k - 1; i >= 0; --i) {
        long x0 = 10 * i;
        long top = 40 + jit(i, 7);
        long gap = 10 + jit(i + 3, 5);
        pts.push_back(Point{Rat(x0 + 9), Rat(gap)});      // gap floor right of tooth
        pts.push_back(Point{Rat(x0 + 7), Rat(top)});      // tooth top right
        pts.push_back(Point{Rat(x0 + 3), Rat(top + 2)});  // tooth top left
        pts.push_back(Point{Rat(x0 + 1), Rat(gap + 3)});  // gap floor left of tooth
    }
    pts.back() = Point{Rat(0), pts.back().y};  // close against the left wall
    return validate_polygon(std::move(pts));
}

bool in_general_position(const SimplePolygon& poly) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (orient(poly.vertex(i), poly.vertex(j), poly.vertex(k)) == Orientation::Collinear)
                    return false;
    return true;
}

}  // namespace segvis
