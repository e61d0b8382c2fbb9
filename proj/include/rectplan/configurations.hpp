#pragma once

#include <array>
#include <vector>

#include "rectplan/instance.hpp"

namespace rectplan {

// Relative order of a robot pair along one axis: signs (-1, 0, +1) of
// lo_i-lo_j, lo_i-hi_j, hi_i-lo_j, hi_i-hi_j, where lo/hi are the pair's
// rectangle edges on that axis.
using AxisOrder = std::array<int, 4>;

struct PairOrder {
    AxisOrder x;
    AxisOrder y;
    bool operator==(const PairOrder&) const = default;
};

// One PairOrder per unordered pair {i, j}, i < j, in row-major pair order.
struct Configuration {
    std::vector<PairOrder> pairs;
    bool operator==(const Configuration&) const = default;
};

// Throws Error("OverlappingRealization") if any two interiors overlap.
Configuration compute_configuration(const std::vector<Rect>& rects);

// Serial axis-aligned schedule of at most 2k moves carrying `from` to `to`
// inside `box`: horizontal phase (left-movers by nondecreasing left edge,
// right-movers by nonincreasing right edge), then the vertical analogue.
// Preconditions: equal configurations, matching dimensions, everything inside
// the box. Throws Error("ConfigurationMismatch") / Error("OutOfBox").
Schedule morph(const Rect& box, const std::vector<Rect>& from, const std::vector<Rect>& to);

// 2k * 5^(k(k-1)), the move budget licensed for boxed axis-aligned instances.
mpz_class boxed_budget(long k);

}  // namespace rectplan
