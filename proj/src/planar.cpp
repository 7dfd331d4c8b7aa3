#include "segvis/planar.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace segvis {

bool angular_less(const Point& origin, const Point& a, const Point& b) {
    auto half = [&](const Point& q) {
        if (q.y != origin.y) return q.y > origin.y ? 0 : 1;
        return q.x > origin.x ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return orient(origin, a, b) == Orientation::CCW;
}

namespace {

struct HalfEdge {
    uint32_t edge;
    bool forward;  // a->b
};

Point he_from(const Subdivision::Edge& e, const HalfEdge& h) { return h.forward ? e.a : e.b; }
Point he_to(const Subdivision::Edge& e, const HalfEdge& h) { return h.forward ? e.b : e.a; }

}  // namespace

Subdivision::Subdivision(const std::vector<InputSeg>& segments) {
    const size_t s = segments.size();
    // Split points per input segment (parameterized by the point itself).
    std::vector<std::vector<Point>> splits(s);
    for (size_t i = 0; i < s; ++i) {
        splits[i].push_back(segments[i].a);
        splits[i].push_back(segments[i].b);
    }
    for (size_t i = 0; i < s; ++i) {
        for (size_t j = i + 1; j < s; ++j) {
            auto res = segment_intersection({segments[i].a, segments[i].b},
                                            {segments[j].a, segments[j].b});
            if (auto* pi = std::get_if<PointIntersection>(&res)) {
                splits[i].push_back(pi->p);
                splits[j].push_back(pi->p);
            } else if (auto* ov = std::get_if<OverlapIntersection>(&res)) {
                splits[i].push_back(ov->from);
                splits[i].push_back(ov->to);
                splits[j].push_back(ov->from);
                splits[j].push_back(ov->to);
            }
        }
    }

    // Elementary edges, deduplicated; carriers merged for coincident pieces.
    std::map<std::pair<Point, Point>, std::vector<int>, bool (*)(const std::pair<Point, Point>&, const std::pair<Point, Point>&)>
        elem([](const std::pair<Point, Point>& x, const std::pair<Point, Point>& y) {
            if (x.first != y.first) return lex_less(x.first, y.first);
            return lex_less(x.second, y.second);
        });
    for (size_t i = 0; i < s; ++i) {
        auto& pts = splits[i];
        std::sort(pts.begin(), pts.end(), PointLess{});
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (size_t k = 0; k + 1 < pts.size(); ++k) {
            Point a = pts[k], b = pts[k + 1];
            if (a == b) continue;
            auto key = lex_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
            elem[key].push_back(segments[i].carrier);
        }
    }
    edges_.reserve(elem.size());
    for (auto& [key, carriers] : elem) {
        Edge e;
        e.a = key.first;
        e.b = key.second;
        std::sort(carriers.begin(), carriers.end());
        carriers.erase(std::unique(carriers.begin(), carriers.end()), carriers.end());
        e.carriers = carriers;
        edges_.push_back(std::move(e));
    }

    // Outgoing half-edges per vertex, CCW-sorted.
    std::map<Point, std::vector<HalfEdge>, PointLess> out;
    for (uint32_t ei = 0; ei < edges_.size(); ++ei) {
        out[edges_[ei].a].push_back({ei, true});
        out[edges_[ei].b].push_back({ei, false});
    }
    for (auto& [v, list] : out) {
        std::sort(list.begin(), list.end(), [&](const HalfEdge& x, const HalfEdge& y) {
            return angular_less(v, he_to(edges_[x.edge], x), he_to(edges_[y.edge], y));
        });
    }

    // next(h) = outgoing edge at head(h) immediately clockwise of twin(h).
    auto next_he = [&](const HalfEdge& h) -> HalfEdge {
        const Point head = he_to(edges_[h.edge], h);
        const auto& list = out.at(head);
        // twin(h) points back along the same edge.
        size_t ti = 0;
        for (size_t k = 0; k < list.size(); ++k)
            if (list[k].edge == h.edge && list[k].forward != h.forward) ti = k;
        size_t pick = (ti + list.size() - 1) % list.size();  // previous in CCW = first CW
        return list[pick];
    };

    auto he_key = [](const HalfEdge& h) { return (static_cast<uint64_t>(h.edge) << 1) | (h.forward ? 1 : 0); };
    std::set<uint64_t> used;
    for (uint32_t ei = 0; ei < edges_.size(); ++ei) {
        for (bool fwd : {true, false}) {
            HalfEdge start{ei, fwd};
            if (used.count(he_key(start))) continue;
            Face face;
            HalfEdge cur = start;
            Rat area2 = 0;
            do {
                used.insert(he_key(cur));
                const Edge& e = edges_[cur.edge];
                Point from = he_from(e, cur), to = he_to(e, cur);
                face.ring_edges.push_back(cur.edge);
                face.ring.push_back(from);
                area2 += from.x * to.y - to.x * from.y;
                int fid = static_cast<int>(faces_.size());
                if (cur.forward)
                    edges_[cur.edge].face_left = fid;
                else
                    edges_[cur.edge].face_right = fid;
                cur = next_he(cur);
            } while (he_key(cur) != he_key(start));
            face.ccw = area2 > 0;
            faces_.push_back(std::move(face));
        }
    }

    // Strictly interior sample per bounded face: centroid of a convex-corner
    // ear, verified by parity against the face ring.
    auto inside_ring = [&](const std::vector<Point>& ring, const Point& p) {
        bool in = false;
        for (size_t i = 0; i < ring.size(); ++i) {
            const Point& a = ring[i];
            const Point& b = ring[(i + 1) % ring.size()];
            if (on_segment(a, b, p)) return false;
            bool ab = a.y <= p.y, bb = b.y <= p.y;
            if (ab == bb) continue;
            Rat t = (p.y - a.y) / (b.y - a.y);
            if (a.x + t * (b.x - a.x) > p.x) in = !in;
        }
        return in;
    };
    for (uint32_t fi = 0; fi < faces_.size(); ++fi) {
        Face& f = faces_[fi];
        if (!f.ccw) continue;
        cells_.push_back(fi);
        const auto& ring = f.ring;
        const size_t m = ring.size();
        bool found = false;
        for (size_t i = 0; i < m && !found; ++i) {
            const Point& a = ring[(i + m - 1) % m];
            const Point& b = ring[i];
            const Point& c = ring[(i + 1) % m];
            if (orient(a, b, c) != Orientation::CCW) continue;
            Point cand{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
            if (inside_ring(ring, cand)) {
                f.sample = cand;
                found = true;
                break;
            }
            // Shrink toward the corner until interior.
            Point mid = b;
            for (int iter = 0; iter < 64 && !found; ++iter) {
                cand = Point{(mid.x + cand.x) / 2, (mid.y + cand.y) / 2};
                if (inside_ring(ring, cand)) {
                    f.sample = cand;
                    found = true;
                }
            }
        }
        if (!found) throw std::runtime_error("could not find interior sample of a face");
    }
}

SlabLocator::SlabLocator(std::vector<Seg> segs) : segs_(std::move(segs)) {
    for (auto& sg : segs_) {
        if (sg.b.x < sg.a.x || (sg.b.x == sg.a.x && sg.b.y < sg.a.y)) {
            std::swap(sg.a, sg.b);
            // labels stay: above/below are geometric, not directional
        }
    }
    std::vector<Rat> xs;
    for (const auto& sg : segs_) {
        xs.push_back(sg.a.x);
        xs.push_back(sg.b.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs_ = std::move(xs);
    if (xs_.empty()) return;
    slab_segs_.assign(xs_.size() - 1, {});
    for (size_t si = 0; si + 1 < xs_.size(); ++si) {
        Rat mid = (xs_[si] + xs_[si + 1]) / 2;
        std::vector<uint32_t> list;
        for (uint32_t k = 0; k < segs_.size(); ++k)
            if (segs_[k].a.x <= xs_[si] && segs_[k].b.x >= xs_[si + 1] && segs_[k].a.x != segs_[k].b.x)
                list.push_back(k);
        auto y_at = [&](uint32_t k) {
            const Seg& sg = segs_[k];
            Rat t = (mid - sg.a.x) / (sg.b.x - sg.a.x);
            return sg.a.y + t * (sg.b.y - sg.a.y);
        };
        std::sort(list.begin(), list.end(), [&](uint32_t u, uint32_t w) { return y_at(u) < y_at(w); });
        slab_segs_[si] = std::move(list);
    }
}

int SlabLocator::locate(const Point& p) const {
    if (xs_.empty() || p.x < xs_.front() || p.x > xs_.back()) return -1;

    // Points on a vertical segment resolve by label minimum.
    int on_hit = -2;
    for (const auto& sg : segs_) {
        if (sg.a.x == sg.b.x && sg.a.x == p.x && on_segment(sg.a, sg.b, p)) {
            int m = std::min(sg.face_above, sg.face_below);
            int mx = std::max(sg.face_above, sg.face_below);
            int pick = m >= 0 ? m : mx;
            if (on_hit == -2 || pick < on_hit) on_hit = pick;
        }
    }

    auto query_slab = [&](size_t si) -> int {
        const auto& list = slab_segs_[si];
        // Binary search for the first segment strictly above p.
        size_t lo = 0, hi = list.size();
        bool on = false;
        int on_label = -2;
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            const Seg& sg = segs_[list[mid]];
            Orientation o = orient(sg.a, sg.b, p);
            if (o == Orientation::Collinear) {
                on = true;
                int m = std::min(sg.face_above, sg.face_below);
                int mx = std::max(sg.face_above, sg.face_below);
                on_label = m >= 0 ? m : mx;
                // Collinear stacks share the point; scan neighbors.
                for (size_t k = mid; k-- > 0;) {
                    const Seg& s2 = segs_[list[k]];
                    if (orient(s2.a, s2.b, p) != Orientation::Collinear) break;
                    int mm = std::min(s2.face_above, s2.face_below);
                    int mmx = std::max(s2.face_above, s2.face_below);
                    on_label = std::min(on_label, mm >= 0 ? mm : mmx);
                }
                for (size_t k = mid + 1; k < list.size(); ++k) {
                    const Seg& s2 = segs_[list[k]];
                    if (orient(s2.a, s2.b, p) != Orientation::Collinear) break;
                    int mm = std::min(s2.face_above, s2.face_below);
                    int mmx = std::max(s2.face_above, s2.face_below);
                    on_label = std::min(on_label, mm >= 0 ? mm : mmx);
                }
                break;
            }
            if (o == Orientation::CCW)
                hi = mid;  // p is above (left of +x-directed segment)
            else
                lo = mid + 1;
        }
        if (on) return on_label;
        if (lo == 0) return -1;  // below everything
        const Seg& below = segs_[list[lo - 1]];
        return below.face_above;
    };

    // Locate the slab; on shared boundaries both sides agree unless the point
    // sits on a vertical segment, which was handled above.
    if (on_hit != -2) return on_hit;
    size_t si = static_cast<size_t>(std::upper_bound(xs_.begin(), xs_.end(), p.x) - xs_.begin());
    if (si > 0) --si;
    if (si >= slab_segs_.size()) si = slab_segs_.size() - 1;
    if (p.x == xs_[si] && si > 0) {
        int r = query_slab(si);
        if (r != -1) return r;
        return query_slab(si - 1);
    }
    return query_slab(si);
}

}  // namespace segvis
