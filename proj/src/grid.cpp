#include "rectplan/grid.hpp"

#include <set>

#include "rectplan/error.hpp"

namespace rectplan {

namespace {

// One axis of the construction. `basics` are (coordinate, extent-of-a-robot-
// centered-there) pairs; `extents` the robot widths/heights.
std::vector<Rational> build_axis(const std::vector<std::pair<Rational, Rational>>& basics,
                                 const std::vector<Rational>& extents, long depth) {
    // Distinct multiset sums of exactly i extents, for i = 1..depth.
    std::set<Rational> sums_all;
    std::set<Rational> level{Rational(0)};
    for (long i = 1; i <= depth; ++i) {
        std::set<Rational> next;
        for (const Rational& s : level)
            for (const Rational& e : extents) next.insert(s + e);
        sums_all.insert(next.begin(), next.end());
        level = std::move(next);
    }

    std::set<Rational> lines;
    for (const auto& [b, wb] : basics) lines.insert(b);
    for (const auto& [b, wb] : basics)
        for (const Rational& w : extents)
            for (const Rational& s : sums_all) {
                Rational off = wb / 2 + w / 2 + s;
                lines.insert(b + off);
                lines.insert(b - off);
            }
    return {lines.begin(), lines.end()};
}

}  // namespace

Grid build_grid(const Instance& inst, long depth) {
    if (!inst.dirs.is_axis_aligned())
        fail("NonAxisAlignedDirections",
             "the instance grid is defined for the axis-aligned direction set");
    if (depth < 0) fail("InvariantViolation", "negative stacking depth");

    std::vector<std::pair<Rational, Rational>> xbasics, ybasics;
    std::vector<Rational> widths, heights;
    for (const RobotSpec& r : inst.robots) {
        // A basic line can carry several robots' centers; every such robot's
        // extent is a candidate w_b, so record one pair per (line, robot).
        xbasics.push_back({r.start.cx, r.start.w});
        xbasics.push_back({r.goal.cx, r.goal.w});
        ybasics.push_back({r.start.cy, r.start.h});
        ybasics.push_back({r.goal.cy, r.goal.h});
        widths.push_back(r.start.w);
        heights.push_back(r.start.h);
    }
    return Grid{build_axis(xbasics, widths, depth), build_axis(ybasics, heights, depth)};
}

}  // namespace rectplan
