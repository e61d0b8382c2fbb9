#include "rectplan/geometry.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "rectplan/error.hpp"

namespace rectplan {

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

std::vector<Vec2> Rect::corners() const {
    return {{left(), bottom()}, {right(), bottom()}, {right(), top()}, {left(), top()}};
}

Rect make_rect(Rational cx, Rational cy, Rational w, Rational h) {
    if (sgn(w) <= 0 || sgn(h) <= 0)
        fail("InvariantViolation", "rectangle needs positive width and height");
    return Rect{std::move(cx), std::move(cy), std::move(w), std::move(h)};
}

Rect translate(const Rect& r, const Vec2& v) {
    return Rect{r.cx + v.x, r.cy + v.y, r.w, r.h};
}

bool interiors_overlap(const Rect& a, const Rect& b) {
    return a.left() < b.right() && b.left() < a.right() &&
           a.bottom() < b.top() && b.bottom() < a.top();
}

bool rect_inside(const Rect& r, const Rect& box) {
    return r.left() >= box.left() && r.right() <= box.right() &&
           r.bottom() >= box.bottom() && r.top() <= box.top();
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;

    auto build = [](const std::vector<Vec2>& src, bool lower) {
        std::vector<Vec2> chain;
        auto scan = [&](const Vec2& p) {
            while (chain.size() >= 2 &&
                   sgn(cross(chain.back() - chain[chain.size() - 2],
                             p - chain.back())) <= 0)
                chain.pop_back();
            chain.push_back(p);
        };
        if (lower)
            for (const Vec2& p : src) scan(p);
        else
            for (auto it = src.rbegin(); it != src.rend(); ++it) scan(*it);
        return chain;
    };

    std::vector<Vec2> lower = build(pts, true);
    std::vector<Vec2> upper = build(pts, false);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) return {pts.front(), pts.back()};  // all collinear
    return lower;
}

ConvexPolygon trace_polygon(const Rect& r, const Vec2& v) {
    if (v.is_zero()) fail("DegenerateDirection", "trace of a zero vector");
    std::vector<Vec2> pts = r.corners();
    for (const Vec2& c : translate(r, v).corners()) pts.push_back(c);
    return ConvexPolygon{convex_hull(std::move(pts))};
}

namespace {

// Projection interval of a polygon on axis n.
std::pair<Rational, Rational> project(const std::vector<Vec2>& poly, const Vec2& n) {
    Rational lo = dot(poly[0], n), hi = lo;
    for (size_t i = 1; i < poly.size(); ++i) {
        Rational d = dot(poly[i], n);
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    }
    return {lo, hi};
}

bool separated_on(const std::vector<Vec2>& a, const std::vector<Vec2>& b, const Vec2& n) {
    auto [alo, ahi] = project(a, n);
    auto [blo, bhi] = project(b, n);
    return ahi <= blo || bhi <= alo;
}

}  // namespace

bool convex_interiors_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    auto axes_of = [](const std::vector<Vec2>& poly) {
        std::vector<Vec2> axes;
        for (size_t i = 0; i < poly.size(); ++i) {
            Vec2 e = poly[(i + 1) % poly.size()] - poly[i];
            axes.push_back({e.y, -e.x});
        }
        return axes;
    };
    for (const Vec2& n : axes_of(a))
        if (separated_on(a, b, n)) return false;
    for (const Vec2& n : axes_of(b))
        if (separated_on(a, b, n)) return false;
    return true;
}

bool serial_collision(const Rect& mover, const Vec2& v, const Rect& stationary) {
    if (v.is_zero()) fail("DegenerateDirection", "move along a zero vector");
    if (v.is_axis_parallel()) {
        // Swept region is itself a rectangle.
        Rect end = translate(mover, v);
        Rect sweep{(mover.cx + end.cx) / 2, (mover.cy + end.cy) / 2,
                   mover.w + abs(v.x), mover.h + abs(v.y)};
        return interiors_overlap(sweep, stationary);
    }
    return convex_interiors_overlap(trace_polygon(mover, v).vertices,
                                    stationary.corners());
}

namespace {

// Open t-interval on which C + S*t < bound; half-lines and the full/empty
// line are encoded with optional endpoints.
struct OpenInterval {
    std::optional<Rational> lo;  // t > lo
    std::optional<Rational> hi;  // t < hi
    bool empty = false;
};

void intersect_less_than(OpenInterval& iv, const Rational& C, const Rational& S,
                         const Rational& bound) {
    if (iv.empty) return;
    if (sgn(S) == 0) {
        if (!(C < bound)) iv.empty = true;
        return;
    }
    Rational t = (bound - C) / S;
    if (sgn(S) > 0) {
        if (!iv.hi || t < *iv.hi) iv.hi = t;
    } else {
        if (!iv.lo || t > *iv.lo) iv.lo = t;
    }
    if (iv.lo && iv.hi && !(*iv.lo < *iv.hi)) iv.empty = true;
}

// Does the open interval meet the closed phase [t0, t1]?
bool meets_closed(const OpenInterval& iv, const Rational& t0, const Rational& t1) {
    if (iv.empty) return false;
    if (iv.lo && !(*iv.lo < t1)) return false;
    if (iv.hi && !(t0 < *iv.hi)) return false;
    return true;
}

}  // namespace

bool parallel_collision(const Rect& a, const Vec2& va, const Rational& amp_a,
                        const Rect& b, const Vec2& vb, const Rational& amp_b) {
    if (!va.is_axis_parallel() || !vb.is_axis_parallel())
        fail("UnsupportedDirection", "parallel collision needs axis-parallel directions");
    if (sgn(amp_a) <= 0 || sgn(amp_b) <= 0)
        fail("DegenerateAmplitude", "amplitudes must be positive");

    const Rational W = (a.w + b.w) / 2;
    const Rational H = (a.h + b.h) / 2;
    const Rational t_split = std::min(amp_a, amp_b);
    const Rational t_end = std::max(amp_a, amp_b);

    // Relative offset a-b is piecewise affine in t; each phase has constant
    // slopes (a mover contributes its direction until its amplitude is spent).
    auto check_phase = [&](const Rational& t0, const Rational& t1) {
        bool a_moving = amp_a > t0;
        bool b_moving = amp_b > t0;
        // Offset at t (within phase): C + S*(t), with clamped contributions
        // folded into C for robots already stopped.
        Rational ax0 = a.cx + std::min(t0, amp_a) * va.x;
        Rational ay0 = a.cy + std::min(t0, amp_a) * va.y;
        Rational bx0 = b.cx + std::min(t0, amp_b) * vb.x;
        Rational by0 = b.cy + std::min(t0, amp_b) * vb.y;
        Rational Sx = (a_moving ? va.x : Rational(0)) - (b_moving ? vb.x : Rational(0));
        Rational Sy = (a_moving ? va.y : Rational(0)) - (b_moving ? vb.y : Rational(0));
        Rational Cx = (ax0 - bx0) - Sx * t0;
        Rational Cy = (ay0 - by0) - Sy * t0;

        OpenInterval iv;
        intersect_less_than(iv, Cx, Sx, W);    //  dx <  W
        intersect_less_than(iv, -Cx, -Sx, W);  // -dx <  W
        intersect_less_than(iv, Cy, Sy, H);
        intersect_less_than(iv, -Cy, -Sy, H);
        return meets_closed(iv, t0, t1);
    };

    if (check_phase(Rational(0), t_split)) return true;
    if (t_split < t_end && check_phase(t_split, t_end)) return true;
    return false;
}

}  // namespace rectplan
