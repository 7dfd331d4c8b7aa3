#include "segvis/triangulate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segvis {

namespace {

bool in_triangle_closed(const Point& a, const Point& b, const Point& c, const Point& p) {
    return orient(a, b, p) != Orientation::CW && orient(b, c, p) != Orientation::CW &&
           orient(c, a, p) != Orientation::CW;
}

// A diagonal candidate (i,j) is valid when it stays strictly inside the
// current sub-polygon given as a vertex list: no boundary edge crossing and
// the midpoint is interior. Fallback path only; ear clipping handles the
// typical case.
bool diagonal_ok(const SimplePolygon& poly, const std::vector<uint32_t>& ring, size_t ia, size_t ib) {
    const size_t m = ring.size();
    if (ia == ib) return false;
    size_t d = (ib + m - ia) % m;
    if (d == 1 || d == m - 1) return false;
    const Point& a = poly.vertex(ring[ia]);
    const Point& b = poly.vertex(ring[ib]);
    for (size_t k = 0; k < m; ++k) {
        size_t k2 = (k + 1) % m;
        if (k == ia || k == ib || k2 == ia || k2 == ib) {
            // Shares an endpoint; only forbid collinear overlap.
            auto res = segment_intersection({a, b}, {poly.vertex(ring[k]), poly.vertex(ring[k2])});
            if (std::holds_alternative<OverlapIntersection>(res)) return false;
            continue;
        }
        if (segments_touch(a, b, poly.vertex(ring[k]), poly.vertex(ring[k2]))) return false;
    }
    // Midpoint inside the ring (ring is CCW).
    Point mid = midpoint(a, b);
    int winding = 0;
    for (size_t k = 0; k < m; ++k) {
        const Point& u = poly.vertex(ring[k]);
        const Point& w = poly.vertex(ring[(k + 1) % m]);
        if (u.y <= mid.y) {
            if (w.y > mid.y && orient(u, w, mid) == Orientation::CCW) ++winding;
        } else {
            if (w.y <= mid.y && orient(u, w, mid) == Orientation::CW) --winding;
        }
    }
    return winding != 0;
}

void clip_ring(const SimplePolygon& poly, std::vector<uint32_t> ring, Triangulation& out) {
    while (ring.size() > 3) {
        const size_t m = ring.size();
        bool clipped = false;
        for (size_t i = 0; i < m; ++i) {
            size_t ip = (i + m - 1) % m, in = (i + 1) % m;
            const Point& a = poly.vertex(ring[ip]);
            const Point& b = poly.vertex(ring[i]);
            const Point& c = poly.vertex(ring[in]);
            if (orient(a, b, c) != Orientation::CCW) continue;
            bool blocked = false;
            for (size_t k = 0; k < m && !blocked; ++k) {
                if (k == ip || k == i || k == in) continue;
                if (in_triangle_closed(a, b, c, poly.vertex(ring[k]))) blocked = true;
            }
            if (blocked) continue;
            out.triangles.push_back({{ring[ip], ring[i], ring[in]}});
            out.diagonals.emplace_back(ring[ip], ring[in]);
            ring.erase(ring.begin() + static_cast<long>(i));
            clipped = true;
            break;
        }
        if (!clipped) {
            // Degenerate collinearity stalled the ear scan: split on any
            // valid diagonal and recurse on both halves.
            for (size_t i = 0; i < m; ++i)
                for (size_t j = i + 2; j < m; ++j)
                    if (diagonal_ok(poly, ring, i, j)) {
                        std::vector<uint32_t> left(ring.begin() + static_cast<long>(i),
                                                   ring.begin() + static_cast<long>(j) + 1);
                        std::vector<uint32_t> right;
                        for (size_t k = j; k != i; k = (k + 1) % m) right.push_back(ring[k]);
                        right.push_back(ring[i]);
                        out.diagonals.emplace_back(ring[i], ring[j]);
                        clip_ring(poly, std::move(left), out);
                        clip_ring(poly, std::move(right), out);
                        return;
                    }
            throw std::runtime_error("triangulation stalled; polygon not simple?");
        }
    }
    if (ring.size() == 3) out.triangles.push_back({{ring[0], ring[1], ring[2]}});
}

}  // namespace

Triangulation triangulate(const SimplePolygon& poly) {
    Triangulation out;
    std::vector<uint32_t> ring(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) ring[i] = static_cast<uint32_t>(i);
    clip_ring(poly, std::move(ring), out);

    // The last clipped triangle contributes the closing "diagonal" of its
    // ring, which is really an edge; rebuild the diagonal list from shared
    // triangle sides instead of trusting clip order.
    out.diagonals.clear();
    std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> side_owner;
    for (uint32_t t = 0; t < out.triangles.size(); ++t) {
        const auto& tri = out.triangles[t].v;
        for (int k = 0; k < 3; ++k) {
            uint32_t a = tri[k], b = tri[(k + 1) % 3];
            side_owner[{std::min(a, b), std::max(a, b)}].push_back(t);
        }
    }
    out.neighbors.assign(out.triangles.size(), {});
    out.neighbor_across.assign(out.triangles.size(), {-1, -1, -1});
    for (const auto& [side, owners] : side_owner) {
        if (owners.size() != 2) continue;
        out.diagonals.push_back(side);
        out.neighbors[owners[0]].push_back(owners[1]);
        out.neighbors[owners[1]].push_back(owners[0]);
        for (uint32_t t : owners) {
            const auto& tri = out.triangles[t].v;
            for (int k = 0; k < 3; ++k) {
                uint32_t a = tri[k], b = tri[(k + 1) % 3];
                if (std::minmax(a, b) == std::minmax(side.first, side.second))
                    out.neighbor_across[t][k] = static_cast<int32_t>(owners[0] == t ? owners[1] : owners[0]);
            }
        }
    }
    return out;
}

bool Triangulation::point_in_triangle(const SimplePolygon& poly, uint32_t t, const Point& p) const {
    const auto& tri = triangles[t].v;
    return in_triangle_closed(poly.vertex(tri[0]), poly.vertex(tri[1]), poly.vertex(tri[2]), p);
}

}  // namespace segvis
