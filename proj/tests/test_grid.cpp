#include <doctest.h>

#include <random>

#include "rectplan/error.hpp"
#include "rectplan/grid.hpp"

using namespace rectplan;

namespace {

Instance lattice_instance(std::vector<std::pair<std::pair<long, long>, std::pair<long, long>>>
                              robots) {
    Instance inst;
    inst.mode = Mode::Serial;
    inst.dirs = make_direction_set({Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(1))});
    for (auto& [s, g] : robots)
        inst.robots.push_back({Rect{Rational(s.first), Rational(s.second), Rational(1), Rational(1)},
                               Rect{Rational(g.first), Rational(g.second), Rational(1), Rational(1)}});
    return inst;
}

mpz_class line_bound(long k, long ell) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k + ell + 1));
    return mpz_class(k) * k * k * p;
}

}  // namespace

TEST_CASE("build_grid: one unit robot, one stacking level") {
    Instance inst = lattice_instance({{{0, 0}, {5, 0}}});
    Grid g = build_grid(inst, 1);
    std::vector<Rational> want_xs = {Rational(-2), Rational(0), Rational(2),
                                     Rational(3),  Rational(5), Rational(7)};
    std::vector<Rational> want_ys = {Rational(-2), Rational(0), Rational(2)};
    CHECK(g.xs == want_xs);
    CHECK(g.ys == want_ys);
    CHECK(mpz_class(g.xs.size()) <= line_bound(1, 1));
}

TEST_CASE("build_grid: depth zero keeps only the basic lines") {
    Instance inst = lattice_instance({{{0, 0}, {5, 3}}});
    Grid g = build_grid(inst, 0);
    CHECK(g.xs == std::vector<Rational>{Rational(0), Rational(5)});
    CHECK(g.ys == std::vector<Rational>{Rational(0), Rational(3)});
}

TEST_CASE("build_grid rejects non-axis direction sets") {
    Instance inst = lattice_instance({{{0, 0}, {5, 0}}});
    inst.dirs = make_direction_set({Vec2(Rational(1), Rational(1))});
    CHECK_THROWS_AS(build_grid(inst, 1), Error);
}

TEST_CASE("build_grid: monotone in the stacking depth") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst;
        inst.dirs =
            make_direction_set({Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(1))});
        int k = 1 + trial % 3;
        for (int r = 0; r < k; ++r) {
            Rational w(1 + (trial + r) % 3, 1 + r % 2);
            Rational h(1 + (trial + 2 * r) % 3, 1 + (r + 1) % 2);
            inst.robots.push_back(
                {Rect{Rational(coord(rng)), Rational(coord(rng)), w, h},
                 Rect{Rational(coord(rng)), Rational(coord(rng)), w, h}});
        }
        Grid prev = build_grid(inst, 0);
        for (long ell = 1; ell <= 4; ++ell) {
            Grid next = build_grid(inst, ell);
            CHECK(std::includes(next.xs.begin(), next.xs.end(), prev.xs.begin(), prev.xs.end()));
            CHECK(std::includes(next.ys.begin(), next.ys.end(), prev.ys.begin(), prev.ys.end()));
            prev = std::move(next);
        }
    }
}

TEST_CASE("build_grid: integral instances produce integral grids") {
    // Odd integer extents and integer centers keep every stacking offset
    // integral; this is what licenses the integer-lattice oracle.
    Instance inst;
    inst.dirs = make_direction_set({Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(1))});
    inst.robots.push_back({Rect{Rational(0), Rational(0), Rational(1), Rational(3)},
                           Rect{Rational(4), Rational(2), Rational(1), Rational(3)}});
    inst.robots.push_back({Rect{Rational(-3), Rational(1), Rational(3), Rational(1)},
                           Rect{Rational(5), Rational(-2), Rational(3), Rational(1)}});
    Grid g = build_grid(inst, 3);
    for (const Rational& x : g.xs) CHECK(is_integer(x));
    for (const Rational& y : g.ys) CHECK(is_integer(y));
}

TEST_CASE("build_grid: the line-count bound holds on random instances") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> coord(-6, 6);
    std::uniform_int_distribution<long> dim(1, 3);
    std::uniform_int_distribution<long> kk(1, 3);
    std::uniform_int_distribution<long> ll(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst;
        inst.dirs =
            make_direction_set({Vec2(Rational(1), Rational(0)), Vec2(Rational(0), Rational(1))});
        long k = kk(rng), ell = ll(rng);
        for (long r = 0; r < k; ++r) {
            Rational w(dim(rng), 2), h(dim(rng), 2);
            inst.robots.push_back({Rect{Rational(coord(rng)), Rational(coord(rng)), w, h},
                                   Rect{Rational(coord(rng)), Rational(coord(rng)), w, h}});
        }
        Grid g = build_grid(inst, ell);
        CHECK(mpz_class(g.xs.size()) <= line_bound(k, ell));
        CHECK(mpz_class(g.ys.size()) <= line_bound(k, ell));
    }
}
