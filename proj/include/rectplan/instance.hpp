#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectplan/geometry.hpp"

namespace rectplan {

enum class Mode { Serial, Parallel };

// Set of admissible move directions; closed under negation by construction
// (parsing adds missing negations), deduplicated, no zero vector. Directions
// are arbitrary nonzero rational vectors; an amplitude alpha moves a robot by
// alpha * v directly, no normalization.
struct DirectionSet {
    std::vector<Vec2> dirs;

    bool contains(const Vec2& v) const;
    // Exactly {(1,0),(-1,0),(0,1),(0,-1)}.
    bool is_axis_aligned() const;
    bool has_two_nonparallel() const;
    size_t size() const { return dirs.size(); }
};

// Canonical order used everywhere a direction index matters: the four unit
// axis vectors rank (+x, -x, +y, -y), anything else after them by (x, y).
DirectionSet make_direction_set(std::vector<Vec2> dirs);

struct RobotSpec {
    Rect start;
    Rect goal;
};

struct Instance {
    std::vector<RobotSpec> robots;
    DirectionSet dirs;
    std::optional<Rect> box;
    std::optional<long> budget;
    Mode mode = Mode::Serial;

    size_t k() const { return robots.size(); }
    std::vector<Rect> start_rects() const;
    std::vector<Rect> goal_rects() const;
};

struct Move {
    size_t robot;
    Vec2 dir;
    Rational amp;  // > 0
};

// One entry per step; serial steps hold exactly one move, parallel steps a
// nonempty set of moves with pairwise-distinct robots.
struct Schedule {
    std::vector<std::vector<Move>> steps;

    size_t length() const { return steps.size(); }
    static Schedule serial(std::vector<Move> moves);
};

enum class VerifyReason {
    Ok,
    NotSerial,       // multi-move step in serial mode
    EmptyStep,
    BadRobotIndex,
    DuplicateRobotInStep,
    BadDirection,    // move direction not in the instance direction set
    BadAmplitude,    // amplitude <= 0
    UnsupportedDirection,  // parallel pair check with non-axis directions
    Collision,
    OutOfBox,
    NotAtGoal,
    OverBudget,
};

const char* to_string(VerifyReason r);

struct VerifyReport {
    bool ok = true;
    VerifyReason reason = VerifyReason::Ok;
    std::optional<size_t> step;   // first offending step, when applicable
    std::optional<size_t> robot;  // offending robot, when applicable
    std::string detail;
};

// Exact simulation of the schedule against the instance. Never throws for
// invalid schedules; all failures land in the report.
VerifyReport verify_schedule(const Instance& inst, const Schedule& s);

// JSON wire formats (see README). Throws Error("MalformedInput") on syntax
// problems and Error("InvariantViolation") naming the first broken invariant.
Instance parse_instance(const std::string& text);
Schedule parse_schedule(const std::string& text);

std::string serialize_instance(const Instance& inst);
std::string serialize_schedule(const Schedule& s);

}  // namespace rectplan
