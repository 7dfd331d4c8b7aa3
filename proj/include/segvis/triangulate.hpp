#pragma once

#include "segvis/polygon.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace segvis {

struct Triangulation {
    struct Triangle {
        std::array<uint32_t, 3> v;  // CCW vertex indices into the polygon
    };
    std::vector<Triangle> triangles;
    std::vector<std::pair<uint32_t, uint32_t>> diagonals;
    /// neighbors[t] = triangle ids sharing a diagonal with t.
    std::vector<std::vector<uint32_t>> neighbors;
    /// neighbor_across[t][k]: triangle across edge (v[k], v[k+1]) of t, or -1
    /// when that edge lies on the polygon boundary.
    std::vector<std::array<int32_t, 3>> neighbor_across;

    bool point_in_triangle(const SimplePolygon& poly, uint32_t t, const Point& p) const;
};

/// Ear-clipping triangulation; exact predicates throughout.
Triangulation triangulate(const SimplePolygon& poly);

}  // namespace segvis
