#pragma once

#include "segvis/geometry.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace segvis {

/// CCW-around-origin comparator anchored at direction (+1, 0): first by
/// half-plane (upper first), then by cross sign. Exact.
bool angular_less(const Point& origin, const Point& a, const Point& b);

/// Planar subdivision induced by a set of possibly intersecting or
/// collinear-overlapping input segments. Segments are split at every mutual
/// intersection; coincident pieces are merged with their carrier lists
/// concatenated. Faces are extracted with interiors to the left of their
/// (CCW) boundary walks; the clockwise outer contours get negative area.
class Subdivision {
public:
    struct InputSeg {
        Point a, b;
        int carrier;  // caller-defined id, reported back on elementary edges
    };
    struct Edge {
        Point a, b;
        std::vector<int> carriers;
        int face_left = -1;   // face of half-edge a->b
        int face_right = -1;  // face of half-edge b->a
    };
    struct Face {
        std::vector<uint32_t> ring_edges;  // elementary edge ids in walk order
        std::vector<Point> ring;           // walk points (ring[i] = start of step i)
        bool ccw = false;                  // positive area (a bounded cell)
        Point sample;                      // strictly interior point (ccw faces)
    };

    explicit Subdivision(const std::vector<InputSeg>& segments);

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    /// Ids of CCW (bounded) faces.
    const std::vector<uint32_t>& cells() const { return cells_; }

private:
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<uint32_t> cells_;
};

/// Exact slab-based point locator over a set of non-crossing segments with
/// face labels on both sides. Queries return the face containing the point;
/// points lying on a segment report the smaller adjacent label.
class SlabLocator {
public:
    struct Seg {
        Point a, b;       // normalized internally so a.x <= b.x
        int face_above;   // face label above (or left for vertical)
        int face_below;
    };

    SlabLocator() = default;
    explicit SlabLocator(std::vector<Seg> segs);

    /// Returns the face label, or `outside` (-1 by convention) when below or
    /// beyond every segment.
    int locate(const Point& p) const;

private:
    std::vector<Rat> xs_;                          // slab boundaries
    std::vector<std::vector<uint32_t>> slab_segs_; // per slab, bottom-to-top
    std::vector<Seg> segs_;
};

}  // namespace segvis
