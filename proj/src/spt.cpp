#include "segvis/spt.hpp"

#include <algorithm>
#include <stdexcept>

namespace segvis {

namespace {

struct ChainNode {
    Point p;
    int id;  // vertex index, or ShortestPathTree::kRoot
};

// Funnel for a directed diagonal (chain.front() -> chain.back()); the
// unexplored region lies strictly to the left of that direction. The chain
// is the concatenation of the geodesics apex->front and apex->back.
struct Funnel {
    std::vector<ChainNode> chain;
    size_t apex;
    int from_triangle;
    int into_triangle;
};

Orientation ori(const ChainNode& a, const ChainNode& b, const Point& v) { return orient(a.p, b.p, v); }

}  // namespace

std::vector<int> ShortestPathTree::path_to(int v) const {
    std::vector<int> rev;
    for (int cur = v; cur != kRoot; cur = parent[static_cast<size_t>(cur)]) rev.push_back(cur);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int containing_triangle(const SimplePolygon& poly, const Triangulation& tri, const Point& p) {
    for (uint32_t t = 0; t < tri.triangles.size(); ++t)
        if (tri.point_in_triangle(poly, t, p)) return static_cast<int>(t);
    return -1;
}

ShortestPathTree shortest_path_tree(const SimplePolygon& poly, const Triangulation& tri, const Point& root) {
    const size_t n = poly.size();
    ShortestPathTree spt;
    spt.root = root;
    spt.parent.assign(n, -2);

    int t0 = containing_triangle(poly, tri, root);
    if (t0 < 0) throw std::runtime_error("SPT root lies outside the polygon");

    auto assign = [&](uint32_t v, int par) {
        if (spt.parent[v] == -2) spt.parent[v] = par;
    };

    const auto& tv0 = tri.triangles[static_cast<size_t>(t0)].v;
    for (int k = 0; k < 3; ++k) {
        // Root coinciding with a corner: the corner is not its own child.
        if (poly.vertex(tv0[static_cast<size_t>(k)]) == root) spt.parent[tv0[static_cast<size_t>(k)]] = -3;
    }
    for (int k = 0; k < 3; ++k)
        if (spt.parent[tv0[static_cast<size_t>(k)]] == -2) assign(tv0[static_cast<size_t>(k)], ShortestPathTree::kRoot);

    std::vector<Funnel> stack;
    auto seed = [&](uint32_t a, uint32_t b, int across) {
        // Directed so the unexplored side (triangle `across`) is on the left
        // of a->b; the triangle t0 itself is CCW so edge (a,b) of t0 has t0 on
        // its left, hence the far side is left of (b,a).
        Funnel f;
        f.chain = {ChainNode{poly.vertex(b), static_cast<int>(b)},
                   ChainNode{root, ShortestPathTree::kRoot},
                   ChainNode{poly.vertex(a), static_cast<int>(a)}};
        f.apex = 1;
        f.from_triangle = t0;
        f.into_triangle = across;
        stack.push_back(std::move(f));
    };
    for (int k = 0; k < 3; ++k) {
        int across = tri.neighbor_across[static_cast<size_t>(t0)][static_cast<size_t>(k)];
        if (across >= 0) seed(tv0[static_cast<size_t>(k)], tv0[static_cast<size_t>((k + 1) % 3)], across);
    }

    while (!stack.empty()) {
        Funnel f = std::move(stack.back());
        stack.pop_back();
        const auto& tvert = tri.triangles[static_cast<size_t>(f.into_triangle)].v;

        // Opposite vertex: the corner that is not a diagonal endpoint.
        uint32_t front_id = static_cast<uint32_t>(f.chain.front().id);
        uint32_t back_id = static_cast<uint32_t>(f.chain.back().id);
        uint32_t vid = tvert[0];
        for (int k = 0; k < 3; ++k)
            if (tvert[static_cast<size_t>(k)] != front_id && tvert[static_cast<size_t>(k)] != back_id)
                vid = tvert[static_cast<size_t>(k)];
        const Point& v = poly.vertex(vid);

        // Tangent scan from the apex outward.
        const auto& C = f.chain;
        const size_t m = C.size() - 1;
        size_t a = f.apex;
        size_t contact = a;
        if (a > 0 && ori(C[a], C[a - 1], v) == Orientation::CCW) {
            size_t i = a - 1;
            while (i > 0 && ori(C[i], C[i - 1], v) == Orientation::CCW) --i;
            contact = i;
        } else if (a < m && ori(C[a], C[a + 1], v) == Orientation::CW) {
            size_t i = a + 1;
            while (i < m && ori(C[i], C[i + 1], v) == Orientation::CW) ++i;
            contact = i;
        }
        assign(vid, C[contact].id);

        // Split into the two successor funnels.
        for (int k = 0; k < 3; ++k) {
            uint32_t ea = tvert[static_cast<size_t>(k)], eb = tvert[static_cast<size_t>((k + 1) % 3)];
            int across = tri.neighbor_across[static_cast<size_t>(f.into_triangle)][static_cast<size_t>(k)];
            if (across < 0 || across == f.from_triangle) continue;
            Funnel nf;
            nf.from_triangle = f.into_triangle;
            nf.into_triangle = across;
            if ((ea == front_id && eb == vid) || (eb == front_id && ea == vid)) {
                // Left diagonal (front, v): chain C[0..contact] + v; the far
                // region is left of (front -> v).
                nf.chain.assign(C.begin(), C.begin() + static_cast<long>(contact) + 1);
                nf.chain.push_back(ChainNode{v, static_cast<int>(vid)});
                nf.apex = std::min(a, contact);
            } else {
                // Right diagonal (v, back): chain v + C[contact..m].
                nf.chain.push_back(ChainNode{v, static_cast<int>(vid)});
                nf.chain.insert(nf.chain.end(), C.begin() + static_cast<long>(contact), C.end());
                nf.apex = std::max(a, contact) - contact + 1;
            }
            stack.push_back(std::move(nf));
        }
    }

    // Root-on-vertex sentinel back to a defined state.
    for (size_t i = 0; i < n; ++i)
        if (spt.parent[i] == -3) spt.parent[i] = ShortestPathTree::kRoot;
    for (size_t i = 0; i < n; ++i)
        if (spt.parent[i] == -2) throw std::runtime_error("SPT did not reach every vertex");

    // Children lists ordered CCW by direction around each node.
    spt.children.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
        int par = spt.parent[i];
        if (par >= 0)
            spt.children[static_cast<size_t>(par)].push_back(static_cast<int>(i));
        else if (poly.vertex(i) != root)
            spt.root_children.push_back(static_cast<int>(i));
    }
    auto angular_less = [&](const Point& origin, const Point& pa, const Point& pb) {
        auto half = [&](const Point& q) {
            if (q.y != origin.y) return q.y > origin.y ? 0 : 1;
            return q.x > origin.x ? 0 : 1;
        };
        int ha = half(pa), hb = half(pb);
        if (ha != hb) return ha < hb;
        return orient(origin, pa, pb) == Orientation::CCW;
    };
    auto sort_children = [&](const Point& origin, std::vector<int>& kids) {
        std::sort(kids.begin(), kids.end(), [&](int x, int y) {
            return angular_less(origin, poly.vertex(static_cast<size_t>(x)), poly.vertex(static_cast<size_t>(y)));
        });
    };
    sort_children(root, spt.root_children);
    for (size_t i = 0; i < n; ++i) sort_children(poly.vertex(i), spt.children[i]);

    spt.edge_class.assign(n, SptEdgeClass::Primary);
    for (size_t i = 0; i < n; ++i) {
        int par = spt.parent[i];
        if (par == ShortestPathTree::kRoot)
            spt.edge_class[i] = SptEdgeClass::Primary;
        else if (spt.parent[static_cast<size_t>(par)] == ShortestPathTree::kRoot)
            spt.edge_class[i] = SptEdgeClass::Secondary1;
        else
            spt.edge_class[i] = SptEdgeClass::Secondary2;
    }
    return spt;
}

}  // namespace segvis
