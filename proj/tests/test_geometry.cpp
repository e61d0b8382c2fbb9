#include <doctest.h>

#include <random>

#include "rectplan/error.hpp"
#include "rectplan/geometry.hpp"

using namespace rectplan;

namespace {

Rect rect(long cx, long cy, long w, long h) {
    return Rect{Rational(cx), Rational(cy), Rational(w), Rational(h)};
}

Vec2 vec(long x, long y) { return Vec2(Rational(x), Rational(y)); }

Rational rand_rational(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

// Gift wrapping, deliberately independent of the monotone-chain hull used by
// the library.
std::vector<Vec2> jarvis_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec2> hull;
    Vec2 cur = pts.front();
    do {
        hull.push_back(cur);
        Vec2 cand = pts[0] == cur ? pts[1] : pts[0];
        for (const Vec2& p : pts) {
            if (p == cur) continue;
            Rational c = cross(cand - cur, p - cur);
            if (sgn(c) < 0) {
                cand = p;
            } else if (sgn(c) == 0) {
                // collinear: take the farther one
                Rational d1 = dot(cand - cur, cand - cur);
                Rational d2 = dot(p - cur, p - cur);
                if (d2 > d1) cand = p;
            }
        }
        cur = cand;
    } while (!(cur == hull.front()) && hull.size() <= pts.size());
    return hull;
}

}  // namespace

TEST_CASE("translate shifts the center and keeps dimensions") {
    Rect r = translate(rect(1, 2, 2, 4), vec(3, -1));
    CHECK(r == rect(4, 1, 2, 4));
    CHECK(translate(rect(0, 0, 1, 1), vec(0, 0)) == rect(0, 0, 1, 1));
    Rect q = translate(rect(0, 0, 1, 1), Vec2(Rational(1, 2), Rational(1, 3)));
    CHECK(q.cx == Rational(1, 2));
    CHECK(q.cy == Rational(1, 3));
}

TEST_CASE("translate composes additively") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rect r{rand_rational(rng, -9, 9), rand_rational(rng, -9, 9),
               rand_rational(rng, 1, 6) + 1, rand_rational(rng, 1, 6) + 1};
        Vec2 u(rand_rational(rng, -9, 9), rand_rational(rng, -9, 9));
        Vec2 v(rand_rational(rng, -9, 9), rand_rational(rng, -9, 9));
        CHECK(translate(translate(r, u), v) == translate(r, u + v));
    }
}

TEST_CASE("interiors_overlap is open") {
    CHECK_FALSE(interiors_overlap(rect(0, 0, 1, 1), rect(1, 0, 1, 1)));  // edge contact
    CHECK(interiors_overlap(rect(0, 0, 1, 1), Rect{Rational(9, 10), Rational(0), Rational(1),
                                                   Rational(1)}));
    CHECK(interiors_overlap(rect(0, 0, 2, 2), rect(0, 0, 1, 1)));  // containment
}

TEST_CASE("interiors_overlap symmetry and self-overlap") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Rect a{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 4) + Rational(1, 2), rand_rational(rng, 1, 4) + Rational(1, 2)};
        Rect b{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 4) + Rational(1, 2), rand_rational(rng, 1, 4) + Rational(1, 2)};
        CHECK(interiors_overlap(a, b) == interiors_overlap(b, a));
        CHECK(interiors_overlap(a, a));
    }
}

TEST_CASE("trace_polygon: axis-parallel sweeps are rectangles") {
    ConvexPolygon p = trace_polygon(rect(0, 0, 1, 1), vec(2, 0));
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[0] == Vec2(Rational(-1, 2), Rational(-1, 2)));
    CHECK(p.vertices[1] == Vec2(Rational(5, 2), Rational(-1, 2)));
    CHECK(p.vertices[2] == Vec2(Rational(5, 2), Rational(1, 2)));
    CHECK(p.vertices[3] == Vec2(Rational(-1, 2), Rational(1, 2)));

    ConvexPolygon q = trace_polygon(rect(0, 0, 1, 1), vec(0, 1));
    REQUIRE(q.vertices.size() == 4);
    CHECK(q.vertices[0] == Vec2(Rational(-1, 2), Rational(-1, 2)));
    CHECK(q.vertices[1] == Vec2(Rational(1, 2), Rational(-1, 2)));
    CHECK(q.vertices[2] == Vec2(Rational(1, 2), Rational(3, 2)));
    CHECK(q.vertices[3] == Vec2(Rational(-1, 2), Rational(3, 2)));
}

TEST_CASE("trace_polygon: diagonal sweep is the corner hexagon") {
    ConvexPolygon p = trace_polygon(rect(0, 0, 1, 1), vec(2, 3));
    REQUIRE(p.vertices.size() == 6);
    std::vector<Vec2> want = {
        Vec2(Rational(-1, 2), Rational(-1, 2)), Vec2(Rational(1, 2), Rational(-1, 2)),
        Vec2(Rational(5, 2), Rational(5, 2)),   Vec2(Rational(5, 2), Rational(7, 2)),
        Vec2(Rational(3, 2), Rational(7, 2)),   Vec2(Rational(-1, 2), Rational(1, 2))};
    CHECK(p.vertices == want);
    CHECK_THROWS_AS(trace_polygon(rect(0, 0, 1, 1), vec(0, 0)), Error);
}

TEST_CASE("trace_polygon equals an independent hull on random input") {
    std::mt19937 rng(13);
    for (int i = 0; i < 1000; ++i) {
        Rect r{rand_rational(rng, -8, 8), rand_rational(rng, -8, 8),
               rand_rational(rng, 1, 5) + Rational(1, 3), rand_rational(rng, 1, 5) + Rational(1, 3)};
        Vec2 v(rand_rational(rng, -6, 6), rand_rational(rng, -6, 6));
        if (v.is_zero()) continue;
        std::vector<Vec2> pts = r.corners();
        for (const Vec2& c : translate(r, v).corners()) pts.push_back(c);
        std::vector<Vec2> expect = jarvis_hull(pts);
        ConvexPolygon got = trace_polygon(r, v);
        REQUIRE(got.vertices.size() == expect.size());
        CHECK(got.vertices == expect);
    }
}

TEST_CASE("serial_collision: spec cases") {
    CHECK_FALSE(serial_collision(rect(0, 0, 1, 1), vec(2, 0), rect(3, 0, 1, 1)));
    CHECK(serial_collision(rect(0, 0, 1, 1), Vec2(Rational(5, 2), Rational(0)), rect(3, 0, 1, 1)));
    // The sweep fully engulfs the small robot: containment must count.
    CHECK(serial_collision(rect(0, 0, 3, 3), vec(4, 0), rect(2, 0, 1, 1)));
    CHECK_THROWS_AS(serial_collision(rect(0, 0, 1, 1), vec(0, 0), rect(3, 0, 1, 1)), Error);
}

TEST_CASE("serial_collision agrees with the reversed sweep") {
    std::mt19937 rng(17);
    for (int i = 0; i < 500; ++i) {
        Rect m{rand_rational(rng, -6, 6), rand_rational(rng, -6, 6),
               rand_rational(rng, 1, 4) + Rational(1, 2), rand_rational(rng, 1, 4) + Rational(1, 2)};
        Rect s{rand_rational(rng, -6, 6), rand_rational(rng, -6, 6),
               rand_rational(rng, 1, 4) + Rational(1, 2), rand_rational(rng, 1, 4) + Rational(1, 2)};
        Vec2 v(rand_rational(rng, -7, 7), rand_rational(rng, -7, 7));
        if (v.is_zero()) continue;
        CHECK(serial_collision(m, v, s) == serial_collision(translate(m, v), -v, s));
    }
}

TEST_CASE("parallel_collision: spec cases") {
    Vec2 px = vec(1, 0), nx = vec(-1, 0), py = vec(0, 1);
    // Same direction, same speed: the gap is preserved.
    CHECK_FALSE(parallel_collision(rect(0, 0, 1, 1), px, Rational(4), rect(2, 0, 1, 1), px,
                                   Rational(4)));
    // Symmetric head-on on one row.
    CHECK(parallel_collision(rect(0, 0, 1, 1), px, Rational(2), rect(3, 0, 1, 1), nx, Rational(2)));
    // The escape geometry: a long horizontal move clears the rising robot,
    // a short one halts in its column and is struck.
    CHECK_FALSE(parallel_collision(rect(0, 2, 1, 1), px, Rational(3), rect(0, 0, 1, 1), py,
                                   Rational(3)));
    CHECK(parallel_collision(rect(0, 2, 1, 1), px, Rational(1, 2), rect(0, 0, 1, 1), py,
                             Rational(3)));
    CHECK_THROWS_AS(parallel_collision(rect(0, 0, 1, 1), vec(1, 1), Rational(1),
                                       rect(3, 0, 1, 1), px, Rational(1)),
                    Error);
    CHECK_THROWS_AS(parallel_collision(rect(0, 0, 1, 1), px, Rational(0), rect(3, 0, 1, 1), px,
                                       Rational(1)),
                    Error);
}

TEST_CASE("parallel_collision is symmetric") {
    std::mt19937 rng(19);
    const Vec2 axes[4] = {vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)};
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < 500; ++i) {
        Rect a{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 3) + Rational(1, 2), rand_rational(rng, 1, 3) + Rational(1, 2)};
        Rect b{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 3) + Rational(1, 2), rand_rational(rng, 1, 3) + Rational(1, 2)};
        if (interiors_overlap(a, b)) continue;
        Vec2 va = axes[pick(rng)], vb = axes[pick(rng)];
        Rational aa = rand_rational(rng, 1, 8), ab = rand_rational(rng, 1, 8);
        CHECK(parallel_collision(a, va, aa, b, vb, ab) == parallel_collision(b, vb, ab, a, va, aa));
    }
}

TEST_CASE("sampling never contradicts an exact 'no collision'") {
    std::mt19937 rng(23);
    const Vec2 axes[4] = {vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)};
    std::uniform_int_distribution<int> pick(0, 3);
    int serial_false = 0, parallel_false = 0;
    for (int i = 0; i < 1000; ++i) {
        Rect m{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 3) + Rational(1, 2), rand_rational(rng, 1, 3) + Rational(1, 2)};
        Rect s{rand_rational(rng, -5, 5), rand_rational(rng, -5, 5),
               rand_rational(rng, 1, 3) + Rational(1, 2), rand_rational(rng, 1, 3) + Rational(1, 2)};
        Vec2 v(rand_rational(rng, -6, 6), rand_rational(rng, -6, 6));
        if (!v.is_zero() && !serial_collision(m, v, s)) {
            ++serial_false;
            for (int t = 0; t <= 64; ++t)
                CHECK_FALSE(interiors_overlap(translate(m, v * Rational(t, 64)), s));
        }
        if (interiors_overlap(m, s)) continue;
        Vec2 va = axes[pick(rng)], vb = axes[pick(rng)];
        Rational aa = rand_rational(rng, 1, 8), ab = rand_rational(rng, 1, 8);
        if (!parallel_collision(m, va, aa, s, vb, ab)) {
            ++parallel_false;
            Rational T = std::max(aa, ab);
            for (int t = 0; t <= 64; ++t) {
                Rational tt = T * Rational(t, 64);
                Rect am = translate(m, va * std::min(tt, aa));
                Rect bm = translate(s, vb * std::min(tt, ab));
                CHECK_FALSE(interiors_overlap(am, bm));
            }
        }
    }
    // The distribution must actually exercise the "no collision" branches.
    CHECK(serial_false > 100);
    CHECK(parallel_false > 100);
}
