#include "rectplan/instance.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "rectplan/error.hpp"

namespace rectplan {

using json = nlohmann::json;

namespace {

// Rank axis units (+x, -x, +y, -y) ahead of everything else.
int axis_rank(const Vec2& v) {
    if (v == Vec2(Rational(1), Rational(0))) return 0;
    if (v == Vec2(Rational(-1), Rational(0))) return 1;
    if (v == Vec2(Rational(0), Rational(1))) return 2;
    if (v == Vec2(Rational(0), Rational(-1))) return 3;
    return 4;
}

bool dir_less(const Vec2& a, const Vec2& b) {
    int ra = axis_rank(a), rb = axis_rank(b);
    if (ra != rb) return ra < rb;
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

}  // namespace

bool DirectionSet::contains(const Vec2& v) const {
    return std::any_of(dirs.begin(), dirs.end(), [&](const Vec2& d) { return d == v; });
}

bool DirectionSet::is_axis_aligned() const {
    if (dirs.size() != 4) return false;
    for (const Vec2& d : dirs)
        if (axis_rank(d) == 4) return false;
    return true;
}

bool DirectionSet::has_two_nonparallel() const {
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j)
            if (sgn(cross(dirs[i], dirs[j])) != 0) return true;
    return false;
}

DirectionSet make_direction_set(std::vector<Vec2> in) {
    std::vector<Vec2> out;
    auto push_unique = [&](const Vec2& v) {
        for (const Vec2& d : out)
            if (d == v) return;
        out.push_back(v);
    };
    for (const Vec2& v : in) {
        if (v.is_zero()) fail("InvariantViolation", "zero vector in direction set");
        push_unique(v);
        push_unique(-v);
    }
    std::sort(out.begin(), out.end(), dir_less);
    return DirectionSet{std::move(out)};
}

std::vector<Rect> Instance::start_rects() const {
    std::vector<Rect> r;
    for (const auto& rs : robots) r.push_back(rs.start);
    return r;
}

std::vector<Rect> Instance::goal_rects() const {
    std::vector<Rect> r;
    for (const auto& rs : robots) r.push_back(rs.goal);
    return r;
}

Schedule Schedule::serial(std::vector<Move> moves) {
    Schedule s;
    for (Move& m : moves) s.steps.push_back({std::move(m)});
    return s;
}

const char* to_string(VerifyReason r) {
    switch (r) {
        case VerifyReason::Ok: return "ok";
        case VerifyReason::NotSerial: return "not-serial";
        case VerifyReason::EmptyStep: return "empty-step";
        case VerifyReason::BadRobotIndex: return "bad-robot-index";
        case VerifyReason::DuplicateRobotInStep: return "duplicate-robot-in-step";
        case VerifyReason::BadDirection: return "bad-direction";
        case VerifyReason::BadAmplitude: return "bad-amplitude";
        case VerifyReason::UnsupportedDirection: return "unsupported-direction";
        case VerifyReason::Collision: return "collision";
        case VerifyReason::OutOfBox: return "out-of-box";
        case VerifyReason::NotAtGoal: return "not-at-goal";
        case VerifyReason::OverBudget: return "over-budget";
    }
    return "?";
}

VerifyReport verify_schedule(const Instance& inst, const Schedule& s) {
    auto failure = [](VerifyReason reason, std::optional<size_t> step,
                      std::optional<size_t> robot, std::string detail) {
        VerifyReport r;
        r.ok = false;
        r.reason = reason;
        r.step = step;
        r.robot = robot;
        r.detail = std::move(detail);
        return r;
    };

    if (inst.budget && s.length() > static_cast<size_t>(*inst.budget))
        return failure(VerifyReason::OverBudget, std::nullopt, std::nullopt,
                       "schedule longer than the move budget");

    std::vector<Rect> pos = inst.start_rects();
    const size_t k = pos.size();

    for (size_t si = 0; si < s.steps.size(); ++si) {
        const auto& step = s.steps[si];
        if (step.empty())
            return failure(VerifyReason::EmptyStep, si, std::nullopt, "empty step");
        if (inst.mode == Mode::Serial && step.size() != 1)
            return failure(VerifyReason::NotSerial, si, std::nullopt,
                           "serial schedules move one robot per step");

        std::unordered_set<size_t> movers;
        for (const Move& m : step) {
            if (m.robot >= k)
                return failure(VerifyReason::BadRobotIndex, si, m.robot, "no such robot");
            if (!movers.insert(m.robot).second)
                return failure(VerifyReason::DuplicateRobotInStep, si, m.robot,
                               "robot moves twice in one step");
            if (!inst.dirs.contains(m.dir))
                return failure(VerifyReason::BadDirection, si, m.robot,
                               "direction not in the instance direction set");
            if (sgn(m.amp) <= 0)
                return failure(VerifyReason::BadAmplitude, si, m.robot,
                               "amplitude must be positive");
        }

        // Collision checks at the current positions.
        for (const Move& m : step) {
            Vec2 disp = m.dir * m.amp;
            for (size_t o = 0; o < k; ++o) {
                if (o == m.robot || movers.count(o)) continue;
                if (serial_collision(pos[m.robot], disp, pos[o]))
                    return failure(VerifyReason::Collision, si, m.robot,
                                   "mover hits stationary robot " + std::to_string(o));
            }
        }
        for (size_t i = 0; i < step.size(); ++i) {
            for (size_t j = i + 1; j < step.size(); ++j) {
                const Move& a = step[i];
                const Move& b = step[j];
                if (!a.dir.is_axis_parallel() || !b.dir.is_axis_parallel())
                    return failure(VerifyReason::UnsupportedDirection, si, a.robot,
                                   "simultaneous motion is only checkable for "
                                   "axis-parallel directions");
                if (parallel_collision(pos[a.robot], a.dir, a.amp,
                                       pos[b.robot], b.dir, b.amp))
                    return failure(VerifyReason::Collision, si, a.robot,
                                   "movers " + std::to_string(a.robot) + " and " +
                                       std::to_string(b.robot) + " collide");
            }
        }

        // Containment: the swept region of each mover must stay in the box.
        if (inst.box) {
            for (const Move& m : step) {
                Rect end = translate(pos[m.robot], m.dir * m.amp);
                if (!rect_inside(pos[m.robot], *inst.box) || !rect_inside(end, *inst.box))
                    return failure(VerifyReason::OutOfBox, si, m.robot,
                                   "move leaves the bounding box");
            }
        }

        for (const Move& m : step) pos[m.robot] = translate(pos[m.robot], m.dir * m.amp);
    }

    for (size_t i = 0; i < k; ++i)
        if (pos[i] != inst.robots[i].goal)
            return failure(VerifyReason::NotAtGoal, std::nullopt, i,
                           "robot ends away from its goal");

    return VerifyReport{};
}

// ---------------------------------------------------------------------------
// JSON wire formats

namespace {

Rational number_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        fail("MalformedInput",
             where + ": floating-point literals are inexact; write the value as a "
                     "string (\"1/10\" or \"0.1\")");
    fail("MalformedInput", where + ": expected an integer or a rational string");
}

Rect rect_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("cx") || !j.contains("cy") || !j.contains("w") ||
        !j.contains("h"))
        fail("MalformedInput", where + ": rectangle needs cx, cy, w, h");
    Rational w = number_from_json(j.at("w"), where + ".w");
    Rational h = number_from_json(j.at("h"), where + ".h");
    if (sgn(w) <= 0 || sgn(h) <= 0)
        fail("InvariantViolation", where + ": nonpositive rectangle dimensions");
    return Rect{number_from_json(j.at("cx"), where + ".cx"),
                number_from_json(j.at("cy"), where + ".cy"), std::move(w), std::move(h)};
}

Vec2 vec_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        fail("MalformedInput", where + ": expected [x, y]");
    return Vec2(number_from_json(j[0], where + "[0]"),
                number_from_json(j[1], where + "[1]"));
}

json rect_to_json(const Rect& r) {
    return json{{"cx", to_fraction_string(r.cx)},
                {"cy", to_fraction_string(r.cy)},
                {"w", to_fraction_string(r.w)},
                {"h", to_fraction_string(r.h)}};
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("MalformedInput", "invalid JSON");
    return j;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) fail("MalformedInput", "instance must be a JSON object");

    Instance inst;
    std::string mode = j.value("mode", "serial");
    if (mode == "serial")
        inst.mode = Mode::Serial;
    else if (mode == "parallel")
        inst.mode = Mode::Parallel;
    else
        fail("MalformedInput", "mode must be \"serial\" or \"parallel\"");

    if (!j.contains("dirs") || !j.at("dirs").is_array())
        fail("MalformedInput", "instance needs a dirs array");
    std::vector<Vec2> dirs;
    for (size_t i = 0; i < j.at("dirs").size(); ++i)
        dirs.push_back(vec_from_json(j.at("dirs")[i], "dirs[" + std::to_string(i) + "]"));
    inst.dirs = make_direction_set(std::move(dirs));

    if (j.contains("box") && !j.at("box").is_null())
        inst.box = rect_from_json(j.at("box"), "box");

    if (j.contains("budget") && !j.at("budget").is_null()) {
        if (!j.at("budget").is_number_integer())
            fail("MalformedInput", "budget must be an integer");
        long b = j.at("budget").get<long>();
        if (b < 0) fail("InvariantViolation", "budget must be nonnegative");
        inst.budget = b;
    }

    if (!j.contains("robots") || !j.at("robots").is_array() || j.at("robots").empty())
        fail("InvariantViolation", "instance needs at least one robot");
    for (size_t i = 0; i < j.at("robots").size(); ++i) {
        const json& rj = j.at("robots")[i];
        std::string where = "robots[" + std::to_string(i) + "]";
        if (!rj.is_object() || !rj.contains("start") || !rj.contains("goal"))
            fail("MalformedInput", where + " needs start and goal");
        RobotSpec spec{rect_from_json(rj.at("start"), where + ".start"),
                       rect_from_json(rj.at("goal"), where + ".goal")};
        if (spec.start.w != spec.goal.w || spec.start.h != spec.goal.h)
            fail("InvariantViolation",
                 where + ": goal dimensions differ from start dimensions");
        inst.robots.push_back(std::move(spec));
    }

    for (size_t i = 0; i < inst.k(); ++i) {
        for (size_t l = i + 1; l < inst.k(); ++l) {
            if (interiors_overlap(inst.robots[i].start, inst.robots[l].start))
                fail("InvariantViolation", "overlapping starts (robots " +
                                               std::to_string(i) + ", " + std::to_string(l) + ")");
            if (interiors_overlap(inst.robots[i].goal, inst.robots[l].goal))
                fail("InvariantViolation", "overlapping goals (robots " +
                                               std::to_string(i) + ", " + std::to_string(l) + ")");
        }
    }
    if (inst.box) {
        for (size_t i = 0; i < inst.k(); ++i) {
            if (!rect_inside(inst.robots[i].start, *inst.box))
                fail("InvariantViolation",
                     "start of robot " + std::to_string(i) + " outside the box");
            if (!rect_inside(inst.robots[i].goal, *inst.box))
                fail("InvariantViolation",
                     "goal of robot " + std::to_string(i) + " outside the box");
        }
    }
    return inst;
}

Schedule parse_schedule(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
        fail("MalformedInput", "schedule needs a steps array");
    Schedule s;
    for (size_t si = 0; si < j.at("steps").size(); ++si) {
        const json& sj = j.at("steps")[si];
        std::string where = "steps[" + std::to_string(si) + "]";
        if (!sj.is_array() || sj.empty())
            fail("MalformedInput", where + " must be a nonempty array of moves");
        std::vector<Move> step;
        for (size_t mi = 0; mi < sj.size(); ++mi) {
            const json& mj = sj[mi];
            std::string mwhere = where + "[" + std::to_string(mi) + "]";
            if (!mj.is_object() || !mj.contains("robot") || !mj.contains("dir") ||
                !mj.contains("amp"))
                fail("MalformedInput", mwhere + " needs robot, dir, amp");
            if (!mj.at("robot").is_number_integer() || mj.at("robot").get<long long>() < 0)
                fail("MalformedInput", mwhere + ".robot must be a nonnegative integer");
            Move m{static_cast<size_t>(mj.at("robot").get<long long>()),
                   vec_from_json(mj.at("dir"), mwhere + ".dir"),
                   number_from_json(mj.at("amp"), mwhere + ".amp")};
            step.push_back(std::move(m));
        }
        s.steps.push_back(std::move(step));
    }
    return s;
}

std::string serialize_instance(const Instance& inst) {
    json j;
    j["mode"] = inst.mode == Mode::Serial ? "serial" : "parallel";
    j["dirs"] = json::array();
    for (const Vec2& d : inst.dirs.dirs)
        j["dirs"].push_back({to_fraction_string(d.x), to_fraction_string(d.y)});
    j["box"] = inst.box ? rect_to_json(*inst.box) : json();
    j["budget"] = inst.budget ? json(*inst.budget) : json();
    j["robots"] = json::array();
    for (const RobotSpec& r : inst.robots)
        j["robots"].push_back({{"start", rect_to_json(r.start)}, {"goal", rect_to_json(r.goal)}});
    return j.dump(2) + "\n";
}

std::string serialize_schedule(const Schedule& s) {
    json j;
    j["steps"] = json::array();
    for (const auto& step : s.steps) {
        json stepj = json::array();
        for (const Move& m : step)
            stepj.push_back({{"robot", m.robot},
                             {"dir", {to_fraction_string(m.dir.x), to_fraction_string(m.dir.y)}},
                             {"amp", to_fraction_string(m.amp)}});
        j["steps"].push_back(std::move(stepj));
    }
    return j.dump(2) + "\n";
}

}  // namespace rectplan
