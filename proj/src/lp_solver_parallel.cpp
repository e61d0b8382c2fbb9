#include "rectplan/lp_solver_parallel.hpp"

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

const std::array<Vec2, 4> kAxis = {
    Vec2(Rational(1), Rational(0)), Vec2(Rational(-1), Rational(0)),
    Vec2(Rational(0), Rational(1)), Vec2(Rational(0), Rational(-1))};

struct MoverVars {
    size_t x, y, a;
};

struct Skeleton {
    LpBuilder builder;
    std::vector<std::vector<MoverVars>> vars;        // per event, per mover
    std::vector<std::vector<AffinePoint>> pos;       // robot centers before each event
};

Skeleton build_skeleton(const Instance& inst, const std::vector<ParallelEvent>& events) {
    Skeleton sk;
    std::vector<AffinePoint> cur;
    for (const RobotSpec& r : inst.robots)
        cur.push_back({Affine(r.start.cx), Affine(r.start.cy)});

    for (size_t e = 0; e < events.size(); ++e) {
        const ParallelEvent& ev = events[e];
        if (ev.movers.empty()) fail("InconsistentCases", "empty parallel event");
        for (size_t m = 0; m + 1 < ev.movers.size(); ++m)
            if (ev.movers[m].first >= ev.movers[m + 1].first)
                fail("InconsistentCases", "movers must be distinct and ascending");
        sk.pos.push_back(cur);
        sk.vars.emplace_back();
        for (const auto& [robot, dir] : ev.movers) {
            if (robot >= inst.k() || dir >= 4)
                fail("InconsistentCases", "event references absent robot or direction");
            std::string tag = std::to_string(e) + "_" + std::to_string(robot);
            MoverVars v{sk.builder.add_var("x" + tag), sk.builder.add_var("y" + tag),
                        sk.builder.add_var("a" + tag)};
            sk.vars.back().push_back(v);
            sk.builder.eq(Affine::var(v.x), cur[robot].x);
            sk.builder.eq(Affine::var(v.y), cur[robot].y);
            sk.builder.ge(Affine::var(v.a), Affine(Rational(0)));

            const Vec2& d = kAxis[dir];
            cur[robot] = {Affine::var(v.x) + Affine::var(v.a) * d.x,
                          Affine::var(v.y) + Affine::var(v.a) * d.y};
            if (inst.box) {
                const Rect& rb = inst.robots[robot].start;
                Affine sx = Affine::var(v.x), sy = Affine::var(v.y);
                for (const AffinePoint& c : {AffinePoint{sx, sy}, cur[robot]}) {
                    sk.builder.ge(c.x - Rational(rb.w / 2), Affine(inst.box->left()));
                    sk.builder.le(c.x + Rational(rb.w / 2), Affine(inst.box->right()));
                    sk.builder.ge(c.y - Rational(rb.h / 2), Affine(inst.box->bottom()));
                    sk.builder.le(c.y + Rational(rb.h / 2), Affine(inst.box->top()));
                }
            }
        }
    }
    sk.pos.push_back(cur);
    for (size_t r = 0; r < inst.k(); ++r) {
        sk.builder.eq(cur[r].x, Affine(inst.robots[r].goal.cx));
        sk.builder.eq(cur[r].y, Affine(inst.robots[r].goal.cy));
    }
    return sk;
}

// View of one robot's placement in a reflected/swapped frame, so every case
// family is written once against the canonical directions.
struct FrameView {
    Affine cx, cy;    // frame coordinates of the center
    Rational hw, hh;  // frame half-extents
    Affine left() const { return cx - hw; }
    Affine right() const { return cx + hw; }
    Affine bottom() const { return cy - hh; }
    Affine top() const { return cy + hh; }
};

struct Frame {
    bool swap = false;  // exchange the axes first
    bool negx = false;  // then negate the frame abscissa
    bool negy = false;

    FrameView view(const AffinePoint& center, const Rect& dims) const {
        Affine fx = swap ? center.y : center.x;
        Affine fy = swap ? center.x : center.y;
        Rational w = swap ? dims.h : dims.w;
        Rational h = swap ? dims.w : dims.h;
        if (negx) fx = -fx;
        if (negy) fy = -fy;
        return FrameView{std::move(fx), std::move(fy), w / 2, h / 2};
    }

    // Direction index as seen in the frame.
    size_t map_dir(size_t dir) const {
        Vec2 d = kAxis[dir];
        if (swap) std::swap(d.x, d.y);
        if (negx) d.x = -d.x;
        if (negy) d.y = -d.y;
        for (size_t i = 0; i < 4; ++i)
            if (kAxis[i] == d) return i;
        fail("InternalError", "axis direction escaped the axis set");
    }
};

int pair_family(size_t dp, size_t dq) {
    bool ph = dp < 2, qh = dq < 2;
    if (ph && qh) return 0;   // A: both horizontal
    if (!ph && !qh) return 1; // B: both vertical
    return 2;                 // C: perpendicular
}

}  // namespace

int parallel_pair_branch_count(size_t dir_p, size_t dir_q) {
    if (dir_p >= 4 || dir_q >= 4) fail("InconsistentCases", "bad axis direction");
    return pair_family(dir_p, dir_q) == 2 ? 6 : 4;
}

namespace {

// Mover (canonical +x in its frame) against a stationary robot.
void emit_stationary(LpBuilder& b, const FrameView& mover, size_t amp_var,
                     const FrameView& stat, int which) {
    switch (which) {
        case 0:  // sweep stays left of the stationary robot
            b.le(mover.right() + Affine::var(amp_var), stat.left());
            break;
        case 1:  // stationary robot left of the mover's start
            b.le(stat.right(), mover.left());
            break;
        case 2:  // mover row below
            b.le(mover.top(), stat.bottom());
            break;
        case 3:
            b.le(stat.top(), mover.bottom());
            break;
        default:
            fail("InconsistentCases", "stationary separation out of range");
    }
}

// Mover pair in the canonical frame. Family A maps both movers to +x / +x or
// +x / -x; family C to p:+x, q:+y. Family B reuses A through an axis swap.
void emit_pair_case(LpBuilder& b, const FrameView& p, size_t ap, size_t fdp,
                    const FrameView& q, size_t aq, size_t fdq, int which) {
    Affine alpha_p = Affine::var(ap), alpha_q = Affine::var(aq);
    if (fdp == 0 && fdq == 0) {  // A-1, same direction
        switch (which) {
            case 0: b.ge(p.bottom(), q.top()); return;
            case 1: b.le(p.top(), q.bottom()); return;
            case 2:  // p left of q, ordered chase
                b.le(p.right(), q.left());
                b.le(p.right() + alpha_p, q.left() + alpha_q);
                return;
            case 3:
                b.le(q.right(), p.left());
                b.le(q.right() + alpha_q, p.left() + alpha_p);
                return;
        }
    } else if (fdp == 0 && fdq == 1) {  // A-2, head-on (p:+x, q:-x)
        switch (which) {
            case 0: b.ge(p.bottom(), q.top()); return;
            case 1: b.le(p.top(), q.bottom()); return;
            case 2:  // p right of q, diverging
                b.ge(p.left(), q.right());
                return;
            case 3:  // p left of q, gap must absorb both amplitudes
                b.le(p.right(), q.left());
                b.le(p.right() + alpha_p, q.left() - alpha_q);
                return;
        }
    } else if (fdp == 0 && fdq == 2) {  // C, p:+x, q:+y
        switch (which) {
            case 0: b.ge(q.bottom(), p.top()); return;            // q above p
            case 1: b.le(q.right(), p.left()); return;            // q left of p
            case 2: b.le(q.top() + alpha_q, p.bottom()); return;  // q's sweep below p
            case 3: b.le(p.right() + alpha_p, q.left()); return;  // p's sweep left of q
            case 4: {
                // Crossing traces, p escapes right before q arrives from
                // below: dV >= dH, and p must actually travel that far.
                Affine dV = p.bottom() - q.top();
                Affine dH = q.right() - p.left();
                b.ge(dV, Affine(Rational(0)));
                b.ge(dH, Affine(Rational(0)));
                b.ge(dV, dH);
                b.ge(alpha_p, dH);
                return;
            }
            case 5: {
                // Crossing traces, q escapes up before p arrives from the left.
                Affine dH = q.left() - p.right();
                Affine dV = p.top() - q.bottom();
                b.ge(dH, Affine(Rational(0)));
                b.ge(dV, Affine(Rational(0)));
                b.ge(dH, dV);
                b.ge(alpha_q, dV);
                return;
            }
        }
    }
    fail("InconsistentCases", "pair case out of range");
}

// Canonicalize a mover pair: returns the frame plus whether roles swapped.
struct PairSetup {
    Frame frame;
    bool swapped_roles;
};

PairSetup canonical_pair(size_t dp, size_t dq) {
    PairSetup s{Frame{}, false};
    int fam = pair_family(dp, dq);
    if (fam == 1) {  // vertical pair: swap axes to reuse family A
        s.frame.swap = true;
        dp = s.frame.map_dir(dp);
        dq = s.frame.map_dir(dq);
        fam = 0;
    }
    if (fam == 0) {
        // Both horizontal now. Same direction: flip so both are +x.
        if (dp == dq) {
            if (dp == 1) s.frame.negx = true;
            return s;
        }
        // Opposite: make p the +x mover.
        if (dp == 1) s.swapped_roles = true;
        return s;
    }
    // Perpendicular: p must be the horizontal one.
    if (dp >= 2) {
        std::swap(dp, dq);
        s.swapped_roles = true;
    }
    if (dp == 1) s.frame.negx = true;
    if (s.frame.map_dir(dq) == 3) s.frame.negy = true;
    return s;
}

void emit_mover_pair(LpBuilder& b, const Instance& inst, const std::vector<AffinePoint>& pos,
                     size_t rp, size_t dp, size_t ap, size_t rq, size_t dq, size_t aq,
                     int which) {
    PairSetup setup = canonical_pair(dp, dq);
    if (setup.swapped_roles) {
        std::swap(rp, rq);
        std::swap(dp, dq);
        std::swap(ap, aq);
    }
    FrameView pv = setup.frame.view(pos[rp], inst.robots[rp].start);
    FrameView qv = setup.frame.view(pos[rq], inst.robots[rq].start);
    emit_pair_case(b, pv, ap, setup.frame.map_dir(dp), qv, aq, setup.frame.map_dir(dq), which);
}

void emit_stationary_sep(LpBuilder& b, const Instance& inst, const std::vector<AffinePoint>& pos,
                         size_t mover, size_t dir, size_t amp_var, size_t stat, int which) {
    // Frame turning the mover's direction into +x.
    Frame f;
    if (dir >= 2) f.swap = true;
    if (f.map_dir(dir) == 1) f.negx = true;
    FrameView mv = f.view(pos[mover], inst.robots[mover].start);
    FrameView sv = f.view(pos[stat], inst.robots[stat].start);
    emit_stationary(b, mv, amp_var, sv, which);
}

}  // namespace

LinProblem build_parallel_lp(const Instance& inst, const std::vector<ParallelEvent>& events,
                             const ParallelCases& cases) {
    if (!inst.dirs.is_axis_aligned())
        fail("NonAxisAligned", "parallel solver needs the axis-aligned direction set");
    Skeleton sk = build_skeleton(inst, events);
    for (size_t e = 0; e < events.size(); ++e) {
        const ParallelEvent& ev = events[e];
        std::vector<size_t> stationary;
        for (size_t r = 0; r < inst.k(); ++r) {
            bool moving = false;
            for (const auto& [robot, dir] : ev.movers)
                if (robot == r) moving = true;
            if (!moving) stationary.push_back(r);
        }
        for (size_t m = 0; m < ev.movers.size(); ++m) {
            for (size_t s = 0; s < stationary.size(); ++s) {
                int which = cases.stationary.at(e).at(m).at(s);
                emit_stationary_sep(sk.builder, inst, sk.pos[e], ev.movers[m].first,
                                    ev.movers[m].second, sk.vars[e][m].a, stationary[s], which);
            }
        }
        size_t p = 0;
        for (size_t i = 0; i < ev.movers.size(); ++i) {
            for (size_t j = i + 1; j < ev.movers.size(); ++j) {
                int which = cases.pairs.at(e).at(p++);
                emit_mover_pair(sk.builder, inst, sk.pos[e], ev.movers[i].first,
                                ev.movers[i].second, sk.vars[e][i].a, ev.movers[j].first,
                                ev.movers[j].second, sk.vars[e][j].a, which);
            }
        }
    }
    return sk.builder.problem();
}

namespace {

struct ParallelSearch {
    const Instance& inst;
    detail::AxisPins pins;
    std::optional<Schedule> found;

    explicit ParallelSearch(const Instance& i) : inst(i), pins(detail::compute_axis_pins(i)) {}

    bool dir_allowed(size_t robot, size_t dir) const {
        if (pins.x_pinned[robot] && dir < 2) return false;
        if (pins.y_pinned[robot] && dir >= 2) return false;
        return true;
    }

    Vec2 displacement(size_t robot) const {
        return Vec2(inst.robots[robot].goal.cx - inst.robots[robot].start.cx,
                    inst.robots[robot].goal.cy - inst.robots[robot].start.cy);
    }

    // A robot can pick up at most one direction per remaining step, so the
    // largest per-robot deficit bounds the needed steps from below.
    long max_deficit(const std::vector<std::vector<Vec2>>& chosen) const {
        long worst = 0;
        for (size_t r = 0; r < inst.k(); ++r) {
            std::vector<Vec2> avail;
            for (size_t d = 0; d < 4; ++d)
                if (dir_allowed(r, d)) avail.push_back(kAxis[d]);
            int def = detail::cone_deficit(displacement(r), chosen[r], avail);
            if (def < 0) return LONG_MAX;
            worst = std::max(worst, static_cast<long>(def));
        }
        return worst;
    }

    bool search_length(long len) {
        std::vector<ParallelEvent> seq;
        std::vector<std::vector<Vec2>> chosen(inst.k());
        if (max_deficit(chosen) > len) return false;
        return dfs_events(seq, chosen, len);
    }

    bool dfs_events(std::vector<ParallelEvent>& seq, std::vector<std::vector<Vec2>>& chosen,
                    long remaining) {
        if (remaining == 0) return try_sequence(seq);
        std::vector<std::pair<size_t, size_t>> movers;
        return dfs_event_movers(seq, chosen, remaining, 0, movers);
    }

    // Assemble one event: every robot either sits out or contributes one of
    // its admissible directions; events enumerate in canonical order (robot
    // subsets by inclusion pattern, directions ascending).
    bool dfs_event_movers(std::vector<ParallelEvent>& seq,
                          std::vector<std::vector<Vec2>>& chosen, long remaining, size_t robot,
                          std::vector<std::pair<size_t, size_t>>& movers) {
        if (robot == inst.k()) {
            if (movers.empty()) return false;
            // Two consecutive identical singleton events merge into one.
            if (movers.size() == 1 && !seq.empty() && seq.back().movers.size() == 1 &&
                seq.back().movers[0].first == movers[0].first &&
                seq.back().movers[0].second / 2 == movers[0].second / 2)
                return false;
            seq.push_back(ParallelEvent{movers});
            bool ok = max_deficit(chosen) <= remaining - 1 &&
                      dfs_events(seq, chosen, remaining - 1);
            seq.pop_back();
            return ok;
        }
        // Sit out.
        if (dfs_event_movers(seq, chosen, remaining, robot + 1, movers)) return true;
        for (size_t d = 0; d < 4; ++d) {
            if (!dir_allowed(robot, d)) continue;
            movers.push_back({robot, d});
            chosen[robot].push_back(kAxis[d]);
            bool ok = dfs_event_movers(seq, chosen, remaining, robot + 1, movers);
            chosen[robot].pop_back();
            movers.pop_back();
            if (ok) return true;
        }
        return false;
    }

    bool try_sequence(const std::vector<ParallelEvent>& seq) {
        Skeleton sk = build_skeleton(inst, seq);
        if (!solve_feasibility(sk.builder.problem()).feasible()) return false;
        return case_dfs(sk, seq, 0);
    }

    // Choices for event e: per (mover, stationary) a separation side, per
    // mover pair a case; solve the accumulated LP after each event.
    bool case_dfs(Skeleton& sk, const std::vector<ParallelEvent>& seq, size_t e) {
        if (e == seq.size()) return finish(sk, seq);
        const ParallelEvent& ev = seq[e];
        std::vector<size_t> stationary;
        for (size_t r = 0; r < inst.k(); ++r) {
            bool moving = false;
            for (const auto& [robot, dir] : ev.movers)
                if (robot == r) moving = true;
            if (!moving) stationary.push_back(r);
        }
        std::vector<std::pair<size_t, size_t>> pair_list;
        for (size_t i = 0; i < ev.movers.size(); ++i)
            for (size_t j = i + 1; j < ev.movers.size(); ++j) pair_list.push_back({i, j});

        return choice_dfs(sk, seq, e, stationary, pair_list, 0);
    }

    bool choice_dfs(Skeleton& sk, const std::vector<ParallelEvent>& seq, size_t e,
                    const std::vector<size_t>& stationary,
                    const std::vector<std::pair<size_t, size_t>>& pair_list, size_t slot) {
        const ParallelEvent& ev = seq[e];
        const size_t n_stat_slots = ev.movers.size() * stationary.size();
        if (slot == n_stat_slots + pair_list.size()) {
            if (!solve_feasibility(sk.builder.problem()).feasible()) return false;
            return case_dfs(sk, seq, e + 1);
        }
        size_t base = sk.builder.row_count();
        if (slot < n_stat_slots) {
            size_t m = slot / stationary.size();
            size_t s = slot % stationary.size();
            for (int which = 0; which < 4; ++which) {
                emit_stationary_sep(sk.builder, inst, sk.pos[e], ev.movers[m].first,
                                    ev.movers[m].second, sk.vars[e][m].a, stationary[s], which);
                if (choice_dfs(sk, seq, e, stationary, pair_list, slot + 1)) return true;
                sk.builder.truncate_rows(base);
            }
            return false;
        }
        auto [i, j] = pair_list[slot - n_stat_slots];
        int count = parallel_pair_branch_count(ev.movers[i].second, ev.movers[j].second);
        for (int which = 0; which < count; ++which) {
            emit_mover_pair(sk.builder, inst, sk.pos[e], ev.movers[i].first, ev.movers[i].second,
                            sk.vars[e][i].a, ev.movers[j].first, ev.movers[j].second,
                            sk.vars[e][j].a, which);
            if (choice_dfs(sk, seq, e, stationary, pair_list, slot + 1)) return true;
            sk.builder.truncate_rows(base);
        }
        return false;
    }

    bool finish(Skeleton& sk, const std::vector<ParallelEvent>& seq) {
        LpResult res = solve_feasibility(sk.builder.problem());
        if (!res.feasible()) return false;
        Schedule s;
        for (size_t e = 0; e < seq.size(); ++e) {
            std::vector<Move> step;
            for (size_t m = 0; m < seq[e].movers.size(); ++m) {
                Rational amp = res.point->values[sk.vars[e][m].a];
                // A zero amplitude makes the mover stationary for this step;
                // its branch rows remain valid, so it is simply dropped.
                if (sgn(amp) <= 0) continue;
                step.push_back({seq[e].movers[m].first, kAxis[seq[e].movers[m].second], amp});
            }
            if (step.empty())
                fail("InternalError",
                     "an all-zero parallel event in a minimum-length witness; a shorter "
                     "schedule should have been found first");
            s.steps.push_back(std::move(step));
        }
        VerifyReport rep = verify_schedule(inst, s);
        if (!rep.ok)
            fail("InternalError", std::string("LP-accepted schedule fails verification: ") +
                                      to_string(rep.reason));
        found = std::move(s);
        return true;
    }
};

}  // namespace

std::optional<Schedule> solve_parallel_lp(const Instance& inst) {
    if (inst.mode != Mode::Parallel)
        fail("UnsupportedMode", "parallel LP solver handles parallel instances");
    if (!inst.dirs.is_axis_aligned())
        fail("NonAxisAligned", "parallel solver needs the axis-aligned direction set");

    long cap;
    if (!inst.box) {
        cap = 4 * static_cast<long>(inst.k());
    } else {
        mpz_class bb = boxed_budget(static_cast<long>(inst.k()));
        cap = bb.fits_slong_p() ? bb.get_si() : LONG_MAX / 2;
    }
    long max_len = inst.budget ? std::min(*inst.budget, cap) : cap;

    bool trivially_done = true;
    for (const RobotSpec& r : inst.robots)
        if (r.start != r.goal) { trivially_done = false; break; }
    if (trivially_done) return Schedule{};

    ParallelSearch search(inst);
    for (long len = 1; len <= max_len; ++len)
        if (search.search_length(len)) return search.found;
    return std::nullopt;
}

}  // namespace rectplan
