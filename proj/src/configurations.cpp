#include "rectplan/configurations.hpp"

#include <algorithm>
#include <numeric>

#include "rectplan/error.hpp"

namespace rectplan {

namespace {

AxisOrder axis_order(const Rational& lo_i, const Rational& hi_i, const Rational& lo_j,
                     const Rational& hi_j) {
    return {cmp(lo_i, lo_j) < 0 ? -1 : (cmp(lo_i, lo_j) > 0 ? 1 : 0),
            cmp(lo_i, hi_j) < 0 ? -1 : (cmp(lo_i, hi_j) > 0 ? 1 : 0),
            cmp(hi_i, lo_j) < 0 ? -1 : (cmp(hi_i, lo_j) > 0 ? 1 : 0),
            cmp(hi_i, hi_j) < 0 ? -1 : (cmp(hi_i, hi_j) > 0 ? 1 : 0)};
}

}  // namespace

Configuration compute_configuration(const std::vector<Rect>& rects) {
    Configuration c;
    for (size_t i = 0; i < rects.size(); ++i) {
        for (size_t j = i + 1; j < rects.size(); ++j) {
            if (interiors_overlap(rects[i], rects[j]))
                fail("OverlappingRealization", "rectangles " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " overlap");
            c.pairs.push_back(
                {axis_order(rects[i].left(), rects[i].right(), rects[j].left(), rects[j].right()),
                 axis_order(rects[i].bottom(), rects[i].top(), rects[j].bottom(),
                            rects[j].top())});
        }
    }
    return c;
}

Schedule morph(const Rect& box, const std::vector<Rect>& from, const std::vector<Rect>& to) {
    if (from.size() != to.size())
        fail("ConfigurationMismatch", "realization sizes differ");
    for (size_t i = 0; i < from.size(); ++i)
        if (from[i].w != to[i].w || from[i].h != to[i].h)
            fail("ConfigurationMismatch", "robot " + std::to_string(i) + " changes dimensions");
    for (size_t i = 0; i < from.size(); ++i)
        if (!rect_inside(from[i], box) || !rect_inside(to[i], box))
            fail("OutOfBox", "robot " + std::to_string(i) + " outside the box");
    if (!(compute_configuration(from) == compute_configuration(to)))
        fail("ConfigurationMismatch", "realizations have different relative orders");

    const size_t k = from.size();
    std::vector<Move> moves;

    // Horizontal phase: left-movers in nondecreasing order of their current
    // left edge, then right-movers in nonincreasing order of their current
    // right edge; each goes straight to its target abscissa.
    std::vector<size_t> lefts, rights;
    for (size_t i = 0; i < k; ++i) {
        int c = cmp(to[i].cx, from[i].cx);
        if (c < 0) lefts.push_back(i);
        if (c > 0) rights.push_back(i);
    }
    std::sort(lefts.begin(), lefts.end(), [&](size_t a, size_t b) {
        int c = cmp(from[a].left(), from[b].left());
        return c != 0 ? c < 0 : a < b;
    });
    std::sort(rights.begin(), rights.end(), [&](size_t a, size_t b) {
        int c = cmp(from[a].right(), from[b].right());
        return c != 0 ? c > 0 : a < b;
    });
    for (size_t i : lefts)
        moves.push_back({i, Vec2(Rational(-1), Rational(0)), from[i].cx - to[i].cx});
    for (size_t i : rights)
        moves.push_back({i, Vec2(Rational(1), Rational(0)), to[i].cx - from[i].cx});

    // Vertical phase: up-movers by nonincreasing current top edge, then
    // down-movers by nondecreasing current bottom edge.
    std::vector<size_t> ups, downs;
    for (size_t i = 0; i < k; ++i) {
        int c = cmp(to[i].cy, from[i].cy);
        if (c > 0) ups.push_back(i);
        if (c < 0) downs.push_back(i);
    }
    std::sort(ups.begin(), ups.end(), [&](size_t a, size_t b) {
        int c = cmp(from[a].top(), from[b].top());
        return c != 0 ? c > 0 : a < b;
    });
    std::sort(downs.begin(), downs.end(), [&](size_t a, size_t b) {
        int c = cmp(from[a].bottom(), from[b].bottom());
        return c != 0 ? c < 0 : a < b;
    });
    for (size_t i : ups)
        moves.push_back({i, Vec2(Rational(0), Rational(1)), to[i].cy - from[i].cy});
    for (size_t i : downs)
        moves.push_back({i, Vec2(Rational(0), Rational(-1)), from[i].cy - to[i].cy});

    return Schedule::serial(std::move(moves));
}

mpz_class boxed_budget(long k) {
    if (k < 1) fail("InvariantViolation", "boxed budget needs k >= 1");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, static_cast<unsigned long>(k) * (k - 1));
    return 2 * k * p;
}

}  // namespace rectplan
