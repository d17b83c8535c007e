#include "polysq/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polysq {

Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    Rat len2 = norm2(ab);
    if (len2.sign() == 0) return norm2(p - a);
    Rat t = dot(p - a, ab) / len2;
    if (t < Rat(0)) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    return norm2(p - (a + ab * t));
}

Rat signed_area2(const std::vector<Vec2>& poly) {
    Rat sum(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        sum += cross(a, b);
    }
    return sum;
}

namespace {

bool on_segment_collinear(const Vec2& p, const Vec2& a, const Vec2& b) {
    // assumes p collinear with [a,b]
    Rat lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
    Rat loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

}  // namespace

SegmentRelation classify_segments(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2) {
    if ((a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1)) return SegmentRelation::Identical;

    int d1 = orient(b1, b2, a1);
    int d2 = orient(b1, b2, a2);
    int d3 = orient(a1, a2, b1);
    int d4 = orient(a1, a2, b2);

    if (d1 == 0 && d2 == 0) {
        // collinear: measure the shared interval
        std::vector<Vec2> shared;
        for (const Vec2* p : {&a1, &a2})
            if (on_segment_collinear(*p, b1, b2)) shared.push_back(*p);
        for (const Vec2* p : {&b1, &b2})
            if (on_segment_collinear(*p, a1, a2)) shared.push_back(*p);
        if (shared.empty()) return SegmentRelation::Disjoint;
        Vec2 lo = shared[0], hi = shared[0];
        auto less = [](const Vec2& u, const Vec2& v) {
            return u.x != v.x ? u.x < v.x : u.y < v.y;
        };
        for (const Vec2& p : shared) {
            if (less(p, lo)) lo = p;
            if (less(hi, p)) hi = p;
        }
        if (lo == hi) return SegmentRelation::PointTouch;
        return SegmentRelation::CollinearOverlap;
    }

    bool straddle_a = (d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0);
    bool straddle_b = (d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0);
    if (straddle_a && straddle_b) return SegmentRelation::ProperCross;

    // touching cases: an endpoint of one lies on the other
    if (d1 == 0 && on_segment_collinear(a1, b1, b2)) return SegmentRelation::PointTouch;
    if (d2 == 0 && on_segment_collinear(a2, b1, b2)) return SegmentRelation::PointTouch;
    if (d3 == 0 && on_segment_collinear(b1, a1, a2)) return SegmentRelation::PointTouch;
    if (d4 == 0 && on_segment_collinear(b2, a1, a2)) return SegmentRelation::PointTouch;
    return SegmentRelation::Disjoint;
}

bool is_simple_polygon(const std::vector<Vec2>& poly) {
    std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (poly[i] == poly[(i + 1) % n]) return false;  // degenerate edge
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2 &a1 = poly[i], &a2 = poly[(i + 1) % n];
            const Vec2 &b1 = poly[j], &b2 = poly[(j + 1) % n];
            SegmentRelation rel = classify_segments(a1, a2, b1, b2);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                if (rel != SegmentRelation::PointTouch) return false;
            } else {
                if (rel != SegmentRelation::Disjoint) return false;
            }
        }
    }
    return true;
}

int point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
    std::size_t n = poly.size();
    // boundary first
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 &a = poly[i], &b = poly[(i + 1) % n];
        if (orient(a, b, p) == 0 && on_segment_collinear(p, a, b)) return 0;
    }
    // crossing number of a ray toward +x, with vertex crossings counted by
    // the half-open rule on y
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        if (a.y > b.y) std::swap(a, b);
        if (a.y <= p.y && p.y < b.y) {
            // x coordinate of the edge at height p.y vs p.x
            Rat side = cross(b - a, p - a);
            if (side.sign() < 0) ++crossings;  // edge strictly to the right
        }
    }
    return crossings % 2 == 1 ? 1 : -1;
}

bool polygons_overlap(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
    std::size_t np = p.size(), nq = q.size();
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nq; ++j) {
            SegmentRelation rel = classify_segments(p[i], p[(i + 1) % np], q[j], q[(j + 1) % nq]);
            if (rel == SegmentRelation::ProperCross) return true;
        }
    }
    // no proper crossing: either disjoint, touching, or one inside the other
    for (const Vec2& v : p)
        if (point_in_polygon(v, q) > 0) return true;
    for (const Vec2& v : q)
        if (point_in_polygon(v, p) > 0) return true;
    // identical or nested sharing all vertices on boundaries: test midpoints
    // of edges as interior witnesses
    for (std::size_t i = 0; i < np; ++i) {
        Vec2 mid = (p[i] + p[(i + 1) % np]) * Rat(1, 2);
        if (point_in_polygon(mid, q) > 0) return true;
    }
    for (std::size_t j = 0; j < nq; ++j) {
        Vec2 mid = (q[j] + q[(j + 1) % nq]) * Rat(1, 2);
        if (point_in_polygon(mid, p) > 0) return true;
    }
    // centroid witness catches the fully-identical case
    auto centroid_inside = [](const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
        Vec2 c(0, 0);
        for (const Vec2& v : a) c = c + v;
        c = c * Rat(1, static_cast<long>(a.size()));
        return point_in_polygon(c, a) > 0 && point_in_polygon(c, b) > 0;
    };
    return centroid_inside(p, q) || centroid_inside(q, p);
}

std::vector<Vec2> snap_points(const std::vector<Vec2>& pts, const Rat& tol) {
    if (tol.sign() == 0 || pts.empty()) return pts;

    // union-find over points bucketed on a tol-sized grid
    std::vector<std::size_t> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);  // earliest index wins
    };

    std::map<std::pair<mpz_class, mpz_class>, std::vector<std::size_t>> buckets;
    auto key_of = [&](const Vec2& p) {
        return std::make_pair((p.x / tol).floor(), (p.y / tol).floor());
    };
    for (std::size_t i = 0; i < pts.size(); ++i) buckets[key_of(pts[i])].push_back(i);

    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [kx, ky] = key_of(pts[i]);
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find({kx + dx, ky + dy});
                if (it == buckets.end()) continue;
                for (std::size_t j : it->second) {
                    if (j <= i) continue;
                    if ((pts[i].x - pts[j].x).abs() <= tol && (pts[i].y - pts[j].y).abs() <= tol)
                        unite(i, j);
                }
            }
        }
    }

    std::vector<Vec2> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = pts[find(i)];
    return out;
}

BBox bbox_of(const std::vector<Vec2>& pts) {
    if (pts.empty()) throw std::invalid_argument("bbox_of: empty point set");
    BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Vec2& p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.xmax = std::max(b.xmax, p.x);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

}  // namespace polysq
