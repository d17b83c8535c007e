#pragma once

#include "polysq/rat.hpp"

#include <optional>
#include <vector>

namespace polysq {

struct Vec2 {
    Rat x, y;

    Vec2() = default;
    Vec2(Rat x, Rat y) : x(std::move(x)), y(std::move(y)) {}
    Vec2(long x, long y) : x(x), y(y) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat norm2(const Vec2& a) { return dot(a, a); }

// Sign of the signed area of triangle (a, b, c): >0 counterclockwise.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

// Squared distance from p to segment [a, b], exact.
Rat dist2_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Twice the signed area of a closed polygon (positive when counterclockwise).
Rat signed_area2(const std::vector<Vec2>& poly);

// True if the closed polygon is simple: no two edges intersect except
// consecutive ones at their shared endpoint, and no edge degenerates.
bool is_simple_polygon(const std::vector<Vec2>& poly);

// Point-in-polygon, exact. Returns +1 strictly inside, 0 on the boundary,
// -1 strictly outside. The polygon must be simple; orientation is irrelevant.
int point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly);

// How two segments relate; used for patch contact classification.
enum class SegmentRelation {
    Disjoint,
    PointTouch,        // exactly one shared point (an endpoint or a crossing at an endpoint)
    ProperCross,       // interiors cross transversally
    CollinearOverlap,  // collinear with a shared sub-segment shorter than either
    Identical,         // same endpoints (either order)
};

SegmentRelation classify_segments(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2);

// True if the interiors of two simple polygons intersect.
bool polygons_overlap(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

// Snap rounding: clusters points that sit within `tol` of one another
// (per coordinate) and replaces each by the earliest member of its cluster.
// With tol == 0 this is the identity. Cluster diameters stay small provided
// the data separates genuine coincidences from genuine gaps by >> tol.
std::vector<Vec2> snap_points(const std::vector<Vec2>& pts, const Rat& tol);

struct BBox {
    Rat xmin, ymin, xmax, ymax;
    bool intersects(const BBox& o, const Rat& slack) const {
        return !(xmax + slack < o.xmin || o.xmax + slack < xmin ||
                 ymax + slack < o.ymin || o.ymax + slack < ymin);
    }
};

BBox bbox_of(const std::vector<Vec2>& pts);

}  // namespace polysq
