#include "segvis/polygon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace segvis {

Rat SimplePolygon::signed_area() const {
    Rat sum = 0;
    for (size_t i = 0; i < verts_.size(); ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[next(i)];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum / 2;
}

SimplePolygon validate_polygon(std::vector<Point> raw) {
    const size_t n = raw.size();
    if (n < 3)
        throw PolygonError(PolygonErrorKind::TooFewVertices,
                           "polygon needs at least 3 vertices, got " + std::to_string(n));

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (raw[i] == raw[j])
                throw PolygonError(PolygonErrorKind::DuplicateVertex,
                                   "duplicate vertex at indices " + std::to_string(i) + "," + std::to_string(j),
                                   i, j);

    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n, k = (i + 2) % n;
        if (orient(raw[i], raw[j], raw[k]) == Orientation::Collinear)
            throw PolygonError(PolygonErrorKind::CollinearTriple,
                               "consecutive collinear vertices " + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k),
                               i, j, k);
    }

    // Simplicity: non-adjacent edges must not touch at all; adjacent edges
    // share exactly their common endpoint (collinear overlap already excluded).
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            Segment ei{raw[i], raw[(i + 1) % n]};
            Segment ej{raw[j], raw[(j + 1) % n]};
            auto res = segment_intersection(ei, ej);
            if (adjacent) {
                if (std::holds_alternative<OverlapIntersection>(res))
                    throw PolygonError(PolygonErrorKind::NotSimple,
                                       "adjacent edges " + std::to_string(i) + "," + std::to_string(j) + " overlap",
                                       i, j);
                if (auto* pi = std::get_if<PointIntersection>(&res)) {
                    const Point& shared = (j == i + 1) ? raw[j] : raw[i];
                    if (pi->p != shared)
                        throw PolygonError(PolygonErrorKind::NotSimple,
                                           "adjacent edges " + std::to_string(i) + "," + std::to_string(j) +
                                               " touch away from their shared vertex",
                                           i, j);
                }
            } else if (!std::holds_alternative<NoIntersection>(res)) {
                throw PolygonError(PolygonErrorKind::NotSimple,
                                   "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect", i, j);
            }
        }
    }

    SimplePolygon poly(std::move(raw));
    Rat area = poly.signed_area();
    if (area == 0)
        throw PolygonError(PolygonErrorKind::NotSimple, "polygon has zero area");
    if (area < 0) std::reverse(poly.verts_.begin(), poly.verts_.end());
    return poly;
}

Containment point_in_polygon(const SimplePolygon& poly, const Point& p) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Segment e = poly.edge(i);
        if (on_segment(e.a, e.b, p)) return Containment::OnBoundary;
    }
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertex(i);
        const Point& b = poly.vertex(poly.next(i));
        bool a_below = a.y <= p.y;
        bool b_below = b.y <= p.y;
        if (a_below == b_below) continue;
        Rat t = (p.y - a.y) / (b.y - a.y);
        Rat ix = a.x + t * (b.x - a.x);
        if (ix > p.x) inside = !inside;
    }
    return inside ? Containment::Inside : Containment::Outside;
}

bool segment_in_polygon(const SimplePolygon& poly, const Segment& s) {
    if (s.a == s.b) return point_in_polygon(poly, s.a) != Containment::Outside;
    if (point_in_polygon(poly, s.a) == Containment::Outside) return false;
    if (point_in_polygon(poly, s.b) == Containment::Outside) return false;

    // Split s at every boundary contact and probe each open piece's midpoint.
    std::vector<Point> cuts{s.a, s.b};
    for (size_t i = 0; i < poly.size(); ++i) {
        auto res = segment_intersection(s, poly.edge(i));
        if (auto* pi = std::get_if<PointIntersection>(&res)) {
            cuts.push_back(pi->p);
        } else if (auto* ov = std::get_if<OverlapIntersection>(&res)) {
            cuts.push_back(ov->from);
            cuts.push_back(ov->to);
        }
    }
    std::sort(cuts.begin(), cuts.end(), PointLess{});
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Point mid = midpoint(cuts[i], cuts[i + 1]);
        if (point_in_polygon(poly, mid) == Containment::Outside) return false;
    }
    return true;
}

SimplePolygon read_polygon_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw ParseError("empty polygon file");
    size_t n = 0;
    try {
        n = std::stoul(tokens[0]);
    } catch (...) {
        throw ParseError("bad vertex count '" + tokens[0] + "'");
    }
    if (tokens.size() != 1 + 2 * n)
        throw ParseError("expected " + std::to_string(2 * n) + " coordinates, got " +
                         std::to_string(tokens.size() - 1));
    std::vector<Point> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i)
        pts.push_back(Point{parse_rat(tokens[1 + 2 * i]), parse_rat(tokens[2 + 2 * i])});
    return validate_polygon(std::move(pts));
}

SimplePolygon load_polygon_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open polygon file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return read_polygon_text(buf.str());
}

std::string polygon_to_text(const SimplePolygon& poly) {
    std::ostringstream out;
    out << poly.size() << "\n";
    for (const auto& v : poly.vertices())
        out << rat_to_string(v.x) << " " << rat_to_string(v.y) << "\n";
    return out.str();
}

}  // namespace segvis
