#pragma once

#include <vector>

#include "rectplan/rational.hpp"

namespace rectplan {

struct Vec2 {
    Rational x;
    Rational y;

    Vec2() = default;
    Vec2(Rational xx, Rational yy) : x(std::move(xx)), y(std::move(yy)) {}

    Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& r) const { return x == r.x && y == r.y; }
    bool operator!=(const Vec2& r) const { return !(*this == r); }

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    bool is_axis_parallel() const { return !is_zero() && (sgn(x) == 0 || sgn(y) == 0); }
};

// cross(a, b) = a.x*b.y - a.y*b.x
Rational cross(const Vec2& a, const Vec2& b);
Rational dot(const Vec2& a, const Vec2& b);

// Axis-aligned rectangle given by its center and full extents. w, h > 0.
struct Rect {
    Rational cx;
    Rational cy;
    Rational w;
    Rational h;

    Rational left() const { return cx - w / 2; }
    Rational right() const { return cx + w / 2; }
    Rational bottom() const { return cy - h / 2; }
    Rational top() const { return cy + h / 2; }

    Vec2 center() const { return {cx, cy}; }
    // Corners in CCW order starting bottom-left.
    std::vector<Vec2> corners() const;

    bool operator==(const Rect& r) const {
        return cx == r.cx && cy == r.cy && w == r.w && h == r.h;
    }
    bool operator!=(const Rect& r) const { return !(*this == r); }
};

// Throws Error("InvariantViolation") unless w > 0 and h > 0.
Rect make_rect(Rational cx, Rational cy, Rational w, Rational h);

// Strictly convex polygon, vertices CCW, first vertex is the lexicographic
// minimum (by x, then y).
struct ConvexPolygon {
    std::vector<Vec2> vertices;
};

Rect translate(const Rect& r, const Vec2& v);

// Open-interior overlap; boundary contact is not an overlap.
bool interiors_overlap(const Rect& a, const Rect& b);

// True iff rect `r` lies inside `box` (boundary contact allowed).
bool rect_inside(const Rect& r, const Rect& box);

// Convex hull of a point set (strictly convex, CCW, starts at lex-min point).
// Degenerate inputs (all collinear) return the < 3 extreme points.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Boundary polygon of the region swept by r translated along v.
// 4 vertices when v is axis-parallel, 6 otherwise.
// Throws Error("DegenerateDirection") when v = 0.
ConvexPolygon trace_polygon(const Rect& r, const Vec2& v);

// Interior intersection test for two convex polygons with nonempty interior,
// by separating-axis search over both polygons' edge normals. Exact.
bool convex_interiors_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

// True iff `mover`, translated by the full vector v, passes through a
// position whose interior meets `stationary` (the filled swept region is
// tested, so engulfing a robot counts as a collision).
// Throws Error("DegenerateDirection") when v = 0.
bool serial_collision(const Rect& mover, const Vec2& v, const Rect& stationary);

// Equal-speed simultaneous translation: at time t in [0, max(amp_a, amp_b)]
// robot a sits at translate(a, min(t, amp_a) * va), analogously b. Returns
// true iff their interiors meet at some t. Restricted to axis-parallel
// directions. Throws Error("UnsupportedDirection") / Error("DegenerateAmplitude").
bool parallel_collision(const Rect& a, const Vec2& va, const Rational& amp_a,
                        const Rect& b, const Vec2& vb, const Rational& amp_b);

}  // namespace rectplan
