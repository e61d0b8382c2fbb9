#include "event_common.hpp"

namespace rectplan::detail {

namespace {

// d = a*u + b*v with a, b >= 0?
bool in_pair_cone(const Vec2& d, const Vec2& u, const Vec2& v) {
    Rational det = cross(u, v);
    if (sgn(det) != 0) {
        Rational a = cross(d, v) / det;
        Rational b = cross(u, d) / det;
        return sgn(a) >= 0 && sgn(b) >= 0;
    }
    return false;
}

bool on_ray(const Vec2& d, const Vec2& u) {
    if (sgn(cross(d, u)) != 0) return false;
    Rational t = sgn(u.x) != 0 ? d.x / u.x : d.y / u.y;
    return sgn(t) >= 0;
}

}  // namespace

bool in_cone(const Vec2& d, const std::vector<Vec2>& gens) {
    if (d.is_zero()) return true;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (on_ray(d, gens[i])) return true;
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (in_pair_cone(d, gens[i], gens[j])) return true;
    }
    return false;
}

int cone_deficit(const Vec2& d, const std::vector<Vec2>& chosen, const std::vector<Vec2>& avail) {
    if (in_cone(d, chosen)) return 0;
    std::vector<Vec2> probe = chosen;
    probe.push_back(Vec2());
    for (const Vec2& v : avail) {
        probe.back() = v;
        if (in_cone(d, probe)) return 1;
    }
    for (size_t i = 0; i < avail.size(); ++i)
        for (size_t j = i; j < avail.size(); ++j)
            if (in_pair_cone(d, avail[i], avail[j]) || on_ray(d, avail[i]) || on_ray(d, avail[j]))
                return 2;
    return -1;
}

AxisPins compute_axis_pins(const Instance& inst) {
    AxisPins pins;
    pins.x_pinned.assign(inst.k(), false);
    pins.y_pinned.assign(inst.k(), false);
    if (!inst.box) return pins;
    for (size_t i = 0; i < inst.k(); ++i) {
        pins.x_pinned[i] = inst.robots[i].start.w == inst.box->w;
        pins.y_pinned[i] = inst.robots[i].start.h == inst.box->h;
    }
    return pins;
}

}  // namespace rectplan::detail
