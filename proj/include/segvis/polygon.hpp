#pragma once

#include "segvis/geometry.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace segvis {

enum class Containment { Outside, OnBoundary, Inside };

/// CCW vertex cycle with a simple boundary. Construct through validate_polygon.
class SimplePolygon {
public:
    SimplePolygon() = default;

    size_t size() const { return verts_.size(); }
    const Point& vertex(size_t i) const { return verts_[i]; }
    const std::vector<Point>& vertices() const { return verts_; }

    size_t next(size_t i) const { return i + 1 == verts_.size() ? 0 : i + 1; }
    size_t prev(size_t i) const { return i == 0 ? verts_.size() - 1 : i - 1; }

    /// Edge i runs from vertex i to vertex i+1 (mod n).
    Segment edge(size_t i) const { return Segment{verts_[i], verts_[next(i)]}; }

    /// Interior angle at i exceeds pi (polygon is CCW).
    bool is_reflex(size_t i) const {
        return orient(verts_[prev(i)], verts_[i], verts_[next(i)]) == Orientation::CW;
    }

    Rat signed_area() const;

    friend SimplePolygon validate_polygon(std::vector<Point> raw);

private:
    explicit SimplePolygon(std::vector<Point> v) : verts_(std::move(v)) {}
    std::vector<Point> verts_;
};

enum class PolygonErrorKind { TooFewVertices, NotSimple, CollinearTriple, DuplicateVertex };

struct PolygonError : std::runtime_error {
    PolygonErrorKind kind;
    size_t index_a = 0;
    size_t index_b = 0;
    size_t index_c = 0;
    PolygonError(PolygonErrorKind k, std::string msg, size_t a = 0, size_t b = 0, size_t c = 0)
        : std::runtime_error(std::move(msg)), kind(k), index_a(a), index_b(b), index_c(c) {}
};

/// Checks simplicity, rejects consecutive collinear triples and duplicate
/// vertices, and normalizes orientation to CCW (reversing CW input).
SimplePolygon validate_polygon(std::vector<Point> raw);

Containment point_in_polygon(const SimplePolygon& poly, const Point& p);

/// True iff every point of s lies in the closed region bounded by poly.
bool segment_in_polygon(const SimplePolygon& poly, const Segment& s);

/// File format: first line n, then n lines "x y"; '#' starts a comment line.
SimplePolygon read_polygon_text(const std::string& text);
SimplePolygon load_polygon_file(const std::string& path);
std::string polygon_to_text(const SimplePolygon& poly);

}  // namespace segvis
