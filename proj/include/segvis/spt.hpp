#pragma once

#include "segvis/polygon.hpp"
#include "segvis/triangulate.hpp"

#include <vector>

namespace segvis {

enum class SptEdgeClass { Primary, Secondary1, Secondary2 };

/// Geodesic tree from a root point to every polygon vertex. Parent -1 means
/// the vertex hangs directly off the root (it is visible from the root under
/// the closed-visibility convention: grazing a reflex corner still counts).
struct ShortestPathTree {
    static constexpr int kRoot = -1;

    Point root;
    std::vector<int> parent;                  // per vertex; kRoot for root children
    std::vector<std::vector<int>> children;   // per vertex, CCW by direction
    std::vector<int> root_children;           // CCW by direction around root
    std::vector<SptEdgeClass> edge_class;     // class of edge parent(v) -> v

    const Point& node_point(const SimplePolygon& poly, int id) const {
        return id == kRoot ? root : poly.vertex(static_cast<size_t>(id));
    }

    /// Vertices on the geodesic root -> v, excluding the root itself.
    std::vector<int> path_to(int v) const;
};

/// Funnel-splitting SPT over a triangulated simple polygon. The root may lie
/// anywhere in the closed polygon.
ShortestPathTree shortest_path_tree(const SimplePolygon& poly, const Triangulation& tri, const Point& root);

/// Deterministic containing triangle (lowest id wins ties on diagonals).
int containing_triangle(const SimplePolygon& poly, const Triangulation& tri, const Point& p);

}  // namespace segvis
