#include "rectplan/lp_solver_serial.hpp"

#include <algorithm>
#include <climits>

#include "event_common.hpp"
#include "rectplan/configurations.hpp"
#include "rectplan/error.hpp"

namespace rectplan {

using detail::Affine;
using detail::AffinePoint;
using detail::LpBuilder;

namespace {

struct EventVars {
    size_t x, y, a;
};

// Symbolic line with a constant direction: every edge we branch over is
// either axis-parallel or parallel to the (fixed) move direction.
struct SymEdge {
    AffinePoint lo;  // endpoint with the smaller major-axis coordinate
    AffinePoint hi;
    Vec2 dir;        // from lo to hi (sample orientation; only the line matters)
    Vec2 normal;     // outward normal for hull edges
};

struct Skeleton {
    LpBuilder builder;
    std::vector<EventVars> vars;
    // pos[e][r]: affine center of robot r when event e starts; pos[events]
    // holds the final centers.
    std::vector<std::vector<AffinePoint>> pos;
};

Affine amin(const Affine& base, const Rational& coeff, size_t var) {
    // base + min(coeff, 0) * var  (var >= 0)
    if (sgn(coeff) < 0) return base + Affine::var(var) * coeff;
    return base;
}

Affine amax(const Affine& base, const Rational& coeff, size_t var) {
    if (sgn(coeff) > 0) return base + Affine::var(var) * coeff;
    return base;
}

Skeleton build_skeleton(const Instance& inst, const std::vector<Event>& events) {
    Skeleton sk;
    std::vector<AffinePoint> cur;
    for (const RobotSpec& r : inst.robots)
        cur.push_back({Affine(r.start.cx), Affine(r.start.cy)});

    for (size_t e = 0; e < events.size(); ++e) {
        const Event& ev = events[e];
        if (ev.robot >= inst.k() || ev.dir >= inst.dirs.size())
            fail("InconsistentCases", "event references absent robot or direction");
        sk.pos.push_back(cur);
        std::string tag = std::to_string(e);
        EventVars v{sk.builder.add_var("x" + tag), sk.builder.add_var("y" + tag),
                    sk.builder.add_var("a" + tag)};
        sk.vars.push_back(v);
        // (ii): the event's start is the robot's current position (its
        // instance start for the first event, chained end otherwise).
        sk.builder.eq(Affine::var(v.x), cur[ev.robot].x);
        sk.builder.eq(Affine::var(v.y), cur[ev.robot].y);
        sk.builder.ge(Affine::var(v.a), Affine(Rational(0)));

        const Vec2& d = inst.dirs.dirs[ev.dir];
        cur[ev.robot] = {Affine::var(v.x) + Affine::var(v.a) * d.x,
                         Affine::var(v.y) + Affine::var(v.a) * d.y};

        if (inst.box) {
            const Rect& rb = inst.robots[ev.robot].start;
            Affine sx = Affine::var(v.x), sy = Affine::var(v.y);
            for (const AffinePoint& c : {AffinePoint{sx, sy}, cur[ev.robot]}) {
                sk.builder.ge(c.x - Rational(rb.w / 2), Affine(inst.box->left()));
                sk.builder.le(c.x + Rational(rb.w / 2), Affine(inst.box->right()));
                sk.builder.ge(c.y - Rational(rb.h / 2), Affine(inst.box->bottom()));
                sk.builder.le(c.y + Rational(rb.h / 2), Affine(inst.box->top()));
            }
        }
    }
    sk.pos.push_back(cur);

    // (i): every robot ends at its goal. Robots without events reduce to
    // constant rows, infeasible exactly when start != goal.
    for (size_t r = 0; r < inst.k(); ++r) {
        sk.builder.eq(cur[r].x, Affine(inst.robots[r].goal.cx));
        sk.builder.eq(cur[r].y, Affine(inst.robots[r].goal.cy));
    }
    return sk;
}

// Sweep-hull corners of the moving rectangle as affine points, CCW, plus the
// per-edge constant outward normals. For axis-parallel directions the hull is
// the swept rectangle (4 edges); otherwise a hexagon (6 edges).
std::vector<SymEdge> hull_edges(const Instance& inst, const Event& ev, const EventVars& v) {
    const Rect& r = inst.robots[ev.robot].start;
    const Vec2& d = inst.dirs.dirs[ev.dir];
    const Rational hw = r.w / 2, hh = r.h / 2;
    Affine x = Affine::var(v.x), y = Affine::var(v.y);
    Affine a = Affine::var(v.a);

    std::vector<AffinePoint> corners;
    if (d.is_axis_parallel()) {
        Affine L = amin(x - hw, d.x, v.a), R = amax(x + hw, d.x, v.a);
        Affine B = amin(y - hh, d.y, v.a), T = amax(y + hh, d.y, v.a);
        corners = {{L, B}, {R, B}, {R, T}, {L, T}};
    } else {
        // Frame with u = sx*x, w = sy*y has a positive-quadrant direction;
        // hull there is start-BL, start-BR, end-BR, end-TR, end-TL, start-TL.
        int sx = sgn(d.x), sy = sgn(d.y);
        Affine lo_u = sx > 0 ? x - hw : x + hw;  // corner minimizing sx*x
        Affine hi_u = sx > 0 ? x + hw : x - hw;
        Affine lo_w = sy > 0 ? y - hh : y + hh;
        Affine hi_w = sy > 0 ? y + hh : y - hh;
        Affine dx = a * d.x, dy = a * d.y;
        corners = {{lo_u, lo_w},           {hi_u, lo_w},           {hi_u + dx, lo_w + dy},
                   {hi_u + dx, hi_w + dy}, {lo_u + dx, hi_w + dy}, {lo_u + dx, lo_w}};
        // The frame map flips orientation when sx*sy < 0.
        if (sx * sy < 0) std::reverse(corners.begin(), corners.end());
    }

    // Constant normals, computed from a sample placement (center at origin,
    // amplitude 1); neither the center nor the amplitude changes them.
    auto sample = [&](const AffinePoint& p) {
        Rational zero_vals[3] = {Rational(0), Rational(0), Rational(1)};
        auto eval = [&](const Affine& f) {
            Rational s = f.c;
            for (const auto& [var, q] : f.terms) {
                if (var == v.x) s += q * zero_vals[0];
                else if (var == v.y) s += q * zero_vals[1];
                else s += q * zero_vals[2];
            }
            return s;
        };
        return Vec2(eval(p.x), eval(p.y));
    };

    std::vector<SymEdge> edges;
    for (size_t i = 0; i < corners.size(); ++i) {
        const AffinePoint& P = corners[i];
        const AffinePoint& Q = corners[(i + 1) % corners.size()];
        Vec2 ev_dir = sample(Q) - sample(P);
        SymEdge e;
        e.lo = P;
        e.hi = Q;
        e.dir = ev_dir;
        e.normal = Vec2(ev_dir.y, -ev_dir.x);
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<SymEdge> rect_edges(const Rect& dims, const AffinePoint& center) {
    const Rational hw = dims.w / 2, hh = dims.h / 2;
    AffinePoint bl{center.x - hw, center.y - hh}, br{center.x + hw, center.y - hh};
    AffinePoint tr{center.x + hw, center.y + hh}, tl{center.x - hw, center.y + hh};
    // left, right, bottom, top; lo/hi ordered along the edge's own axis.
    return {SymEdge{bl, tl, Vec2(Rational(0), Rational(1)), Vec2(Rational(-1), Rational(0))},
            SymEdge{br, tr, Vec2(Rational(0), Rational(1)), Vec2(Rational(1), Rational(0))},
            SymEdge{bl, br, Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(-1))},
            SymEdge{tl, tr, Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(1))}};
}

std::vector<AffinePoint> rect_corners(const Rect& dims, const AffinePoint& center) {
    const Rational hw = dims.w / 2, hh = dims.h / 2;
    return {{center.x - hw, center.y - hh},
            {center.x + hw, center.y - hh},
            {center.x + hw, center.y + hh},
            {center.x - hw, center.y + hh}};
}

// dot(n, p) as an affine form.
Affine ndot(const Vec2& n, const AffinePoint& p) { return p.x * n.x + p.y * n.y; }

// Emit "the chosen edge's line separates the sweep hull from the other
// robot": every vertex of the opposite shape lies on the outer closed side.
void emit_witness(LpBuilder& b, const std::vector<SymEdge>& hull,
                  const std::vector<AffinePoint>& hull_pts, const Rect& odims,
                  const AffinePoint& ocenter, int choice) {
    int nh = static_cast<int>(hull.size());
    if (choice < nh) {
        const SymEdge& e = hull[choice];
        for (const AffinePoint& z : rect_corners(odims, ocenter))
            b.ge(ndot(e.normal, z), ndot(e.normal, e.lo));
        return;
    }
    std::vector<SymEdge> oe = rect_edges(odims, ocenter);
    const SymEdge& e = oe[choice - nh];
    for (const AffinePoint& x : hull_pts)
        b.ge(ndot(e.normal, x), ndot(e.normal, e.lo));
}

std::vector<AffinePoint> hull_points(const std::vector<SymEdge>& hull) {
    std::vector<AffinePoint> pts;
    for (const SymEdge& e : hull) pts.push_back(e.lo);
    return pts;
}

bool edges_parallel(const SymEdge& a, const SymEdge& b) {
    return sgn(cross(a.dir, b.dir)) == 0;
}

// The paper's four exteriority cases for one non-parallel (trace edge, robot
// edge) pair: the lines' intersection point must fall outside one of the two
// segments, on a guessed side, measured along that segment's own major axis.
void emit_legacy_case(LpBuilder& b, const SymEdge& te, const SymEdge& re, int which) {
    Rational denom = cross(te.dir, re.dir);
    // Lines te.lo + t*te.dir and re.lo + s*re.dir meet at te.lo + t*te.dir
    // with t = cross(re.lo - te.lo, re.dir) / denom.
    Affine rel_x = re.lo.x - te.lo.x;
    Affine rel_y = re.lo.y - te.lo.y;
    Affine t = (rel_x * re.dir.y - rel_y * re.dir.x) * (Rational(1) / denom);
    AffinePoint eta{te.lo.x + t * te.dir.x, te.lo.y + t * te.dir.y};

    auto major = [](const SymEdge& e) { return sgn(e.dir.x) != 0 ? 0 : 1; };
    auto coord = [](const AffinePoint& p, int axis) { return axis == 0 ? p.x : p.y; };
    auto lo_hi = [&](const SymEdge& e, int axis) {
        // lo/hi are stored in sample orientation; order along the major axis
        // is fixed by the direction's sign.
        bool fwd = axis == 0 ? sgn(e.dir.x) > 0 : sgn(e.dir.y) > 0;
        return fwd ? std::pair{coord(e.lo, axis), coord(e.hi, axis)}
                   : std::pair{coord(e.hi, axis), coord(e.lo, axis)};
    };

    const SymEdge& target = which < 2 ? te : re;
    int axis = major(target);
    auto [lo, hi] = lo_hi(target, axis);
    if (which % 2 == 0)
        b.le(coord(eta, axis), lo);
    else
        b.ge(coord(eta, axis), hi);
}

}  // namespace

int serial_witness_count(const Instance& inst, const Event& e) {
    if (e.dir >= inst.dirs.size()) fail("InconsistentCases", "bad direction index");
    // Rect-vs-rect separation is decided by the swept rectangle's own four
    // edges; a hexagonal sweep also needs the other robot's edges.
    return inst.dirs.dirs[e.dir].is_axis_parallel() ? 4 : 10;
}

size_t legacy_pair_count(const Instance& inst, const Event& e, size_t other) {
    if (e.robot >= inst.k() || other >= inst.k() || other == e.robot)
        fail("InconsistentCases", "bad robot index");
    std::vector<Event> events{e};
    Skeleton sk = build_skeleton(inst, events);
    std::vector<SymEdge> hull = hull_edges(inst, e, sk.vars[0]);
    std::vector<SymEdge> redges = rect_edges(inst.robots[other].start, sk.pos[0][other]);
    size_t n = 0;
    for (const SymEdge& te : hull)
        for (const SymEdge& re : redges)
            if (!edges_parallel(te, re)) ++n;
    return n;
}

namespace {

// Append the separation rows of one (event, other) choice onto the builder.
void emit_pair(const Instance& inst, const std::vector<Event>& events, Skeleton& sk, size_t e,
               size_t other, int witness, const std::vector<int>* legacy) {
    const Event& ev = events[e];
    std::vector<SymEdge> hull = hull_edges(inst, ev, sk.vars[e]);
    std::vector<AffinePoint> hpts = hull_points(hull);
    const Rect& odims = inst.robots[other].start;
    const AffinePoint& ocenter = sk.pos[e][other];

    int wcount = hull.size() == 4 ? 4 : 10;
    if (witness < 0 || witness >= wcount)
        fail("InconsistentCases", "witness index out of range");
    emit_witness(sk.builder, hull, hpts, odims, ocenter, witness);

    if (legacy) {
        std::vector<SymEdge> redges = rect_edges(odims, ocenter);
        size_t p = 0;
        for (const SymEdge& te : hull) {
            for (const SymEdge& re : redges) {
                if (edges_parallel(te, re)) continue;  // same slope: no constraint
                if (p >= legacy->size())
                    fail("InconsistentCases", "missing legacy case for an edge pair");
                int which = (*legacy)[p++];
                if (which < 0 || which > 3)
                    fail("InconsistentCases", "legacy case out of range");
                emit_legacy_case(sk.builder, te, re, which);
            }
        }
        if (p != legacy->size())
            fail("InconsistentCases", "too many legacy cases for the event");
    }
}

}  // namespace

LinProblem build_serial_lp(const Instance& inst, const std::vector<Event>& events,
                           const SerialCases& cases) {
    Skeleton sk = build_skeleton(inst, events);
    for (size_t e = 0; e < events.size(); ++e) {
        size_t j = 0;
        for (size_t other = 0; other < inst.k(); ++other) {
            if (other == events[e].robot) continue;
            if (e >= cases.witness.size() || j >= cases.witness[e].size())
                fail("InconsistentCases", "missing witness choice");
            const std::vector<int>* legacy = nullptr;
            if (cases.legacy_mode) {
                if (e >= cases.legacy.size() || j >= cases.legacy[e].size())
                    fail("InconsistentCases", "missing legacy cases");
                legacy = &cases.legacy[e][j];
            }
            emit_pair(inst, events, sk, e, other, cases.witness[e][j], legacy);
            ++j;
        }
    }
    return sk.builder.problem();
}

namespace {

struct SerialSearch {
    const Instance& inst;
    bool legacy;
    std::vector<Vec2> dirs;
    detail::AxisPins pins;
    std::optional<Schedule> found;

    explicit SerialSearch(const Instance& i, bool lg)
        : inst(i), legacy(lg), dirs(i.dirs.dirs), pins(detail::compute_axis_pins(i)) {}

    bool event_allowed(size_t robot, size_t dir) const {
        const Vec2& d = dirs[dir];
        if (pins.x_pinned[robot] && sgn(d.x) != 0) return false;
        if (pins.y_pinned[robot] && sgn(d.y) != 0) return false;
        return true;
    }

    Vec2 displacement(size_t robot) const {
        return Vec2(inst.robots[robot].goal.cx - inst.robots[robot].start.cx,
                    inst.robots[robot].goal.cy - inst.robots[robot].start.cy);
    }

    // Sum over robots of the minimum number of further events each needs.
    long total_deficit(const std::vector<std::vector<Vec2>>& chosen) const {
        long total = 0;
        for (size_t r = 0; r < inst.k(); ++r) {
            int d = detail::cone_deficit(displacement(r), chosen[r], usable_dirs(r));
            if (d < 0) return LONG_MAX;
            total += d;
        }
        return total;
    }

    std::vector<Vec2> usable_dirs(size_t robot) const {
        std::vector<Vec2> out;
        for (size_t d = 0; d < dirs.size(); ++d)
            if (event_allowed(robot, d)) out.push_back(dirs[d]);
        return out;
    }

    bool search_length(long len) {
        std::vector<Event> seq;
        std::vector<std::vector<Vec2>> chosen(inst.k());
        if (total_deficit(chosen) > len) return false;
        return dfs_events(seq, chosen, len);
    }

    bool dfs_events(std::vector<Event>& seq, std::vector<std::vector<Vec2>>& chosen,
                    long remaining) {
        if (remaining == 0) return try_sequence(seq);
        for (size_t r = 0; r < inst.k(); ++r) {
            for (size_t d = 0; d < dirs.size(); ++d) {
                if (!event_allowed(r, d)) continue;
                // Consecutive collinear moves of one robot merge into one.
                if (!seq.empty() && seq.back().robot == r &&
                    sgn(cross(dirs[seq.back().dir], dirs[d])) == 0)
                    continue;
                seq.push_back({r, d});
                chosen[r].push_back(dirs[d]);
                bool ok = total_deficit(chosen) <= remaining - 1 &&
                          dfs_events(seq, chosen, remaining - 1);
                chosen[r].pop_back();
                seq.pop_back();
                if (ok) return true;
            }
        }
        return false;
    }

    bool try_sequence(const std::vector<Event>& seq) {
        Skeleton sk = build_skeleton(inst, seq);
        {
            // Skeleton alone must already be feasible.
            LpResult res = solve_feasibility(sk.builder.problem());
            if (!res.feasible()) return false;
        }
        return case_dfs(sk, seq, 0, 0);
    }

    // Branch over (event, other robot) choices in canonical order, solving
    // the accumulated LP after each event's choices are complete.
    bool case_dfs(Skeleton& sk, const std::vector<Event>& seq, size_t e, size_t oj) {
        if (e == seq.size()) return finish(sk, seq);
        std::vector<size_t> others;
        for (size_t o = 0; o < inst.k(); ++o)
            if (o != seq[e].robot) others.push_back(o);
        if (oj == others.size()) {
            LpResult res = solve_feasibility(sk.builder.problem());
            if (!res.feasible()) return false;
            return case_dfs(sk, seq, e + 1, 0);
        }

        size_t other = others[oj];
        std::vector<SymEdge> hull = hull_edges(inst, seq[e], sk.vars[e]);
        int wcount = hull.size() == 4 ? 4 : 10;
        size_t base = sk.builder.row_count();
        for (int w = 0; w < wcount; ++w) {
            if (!legacy) {
                emit_pair(inst, seq, sk, e, other, w, nullptr);
                if (case_dfs(sk, seq, e, oj + 1)) return true;
                sk.builder.truncate_rows(base);
                continue;
            }
            // Legacy: the witness stays as a guard; the paper's cases come on
            // top, one per non-parallel edge pair.
            std::vector<SymEdge> redges = rect_edges(inst.robots[other].start, sk.pos[e][other]);
            std::vector<std::pair<const SymEdge*, const SymEdge*>> pairs;
            for (const SymEdge& te : hull)
                for (const SymEdge& re : redges)
                    if (!edges_parallel(te, re)) pairs.push_back({&te, &re});

            emit_pair(inst, seq, sk, e, other, w, nullptr);
            if (legacy_pairs_dfs(sk, seq, e, oj, pairs, 0)) return true;
            sk.builder.truncate_rows(base);
        }
        return false;
    }

    bool legacy_pairs_dfs(Skeleton& sk, const std::vector<Event>& seq, size_t e, size_t oj,
                          const std::vector<std::pair<const SymEdge*, const SymEdge*>>& pairs,
                          size_t p) {
        if (p == pairs.size()) return case_dfs(sk, seq, e, oj + 1);
        size_t base = sk.builder.row_count();
        for (int which = 0; which < 4; ++which) {
            emit_legacy_case(sk.builder, *pairs[p].first, *pairs[p].second, which);
            // Prune per pair; legacy branching is wide.
            LpResult res = solve_feasibility(sk.builder.problem());
            if (res.feasible() && legacy_pairs_dfs(sk, seq, e, oj, pairs, p + 1)) return true;
            sk.builder.truncate_rows(base);
        }
        return false;
    }

    bool finish(Skeleton& sk, const std::vector<Event>& seq) {
        LpResult res = solve_feasibility(sk.builder.problem());
        if (!res.feasible()) return false;
        std::vector<Move> moves;
        for (size_t e = 0; e < seq.size(); ++e) {
            Rational amp = res.point->values[sk.vars[e].a];
            if (sgn(amp) <= 0)
                fail("InternalError",
                     "zero amplitude in a minimum-length witness; a shorter schedule "
                     "should have been found first");
            moves.push_back({seq[e].robot, dirs[seq[e].dir], amp});
        }
        Schedule s = Schedule::serial(std::move(moves));
        VerifyReport rep = verify_schedule(inst, s);
        if (!rep.ok)
            fail("InternalError", std::string("LP-accepted schedule fails verification: ") +
                                      to_string(rep.reason));
        found = std::move(s);
        return true;
    }
};

}  // namespace

std::optional<Schedule> solve_serial_lp(const Instance& inst, const SerialLpOptions& opts) {
    if (inst.mode != Mode::Serial)
        fail("UnsupportedMode", "serial LP solver handles serial instances");

    long cap;
    if (!inst.box && inst.dirs.has_two_nonparallel()) {
        cap = 4 * static_cast<long>(inst.k());
    } else if (inst.box && inst.dirs.is_axis_aligned()) {
        mpz_class bb = boxed_budget(static_cast<long>(inst.k()));
        cap = bb.fits_slong_p() ? bb.get_si() : LONG_MAX / 2;
    } else {
        if (!inst.budget)
            fail("BudgetRequired",
                 "no move bound applies here; supply an explicit budget");
        cap = *inst.budget;
    }
    long max_len = inst.budget ? std::min(*inst.budget, cap) : cap;

    bool trivially_done = true;
    for (const RobotSpec& r : inst.robots)
        if (r.start != r.goal) { trivially_done = false; break; }
    if (trivially_done) return Schedule{};

    SerialSearch search(inst, opts.legacy_cases);
    for (long len = 1; len <= max_len; ++len)
        if (search.search_length(len)) return search.found;
    return std::nullopt;
}

}  // namespace rectplan
