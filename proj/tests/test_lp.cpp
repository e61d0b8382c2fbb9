#include <doctest.h>

#include <random>

#include "rectplan/error.hpp"
#include "rectplan/lp.hpp"

using namespace rectplan;

TEST_CASE("solve_feasibility: contradictory bounds yield the unit certificate") {
    LinProblem p;
    p.add_var("x");
    p.add({Rational(1)}, Relation::Ge, Rational(1));
    p.add({Rational(1)}, Relation::Le, Rational(0));
    LpResult res = solve_feasibility(p);
    REQUIRE_FALSE(res.feasible());
    REQUIRE(res.certificate);
    CHECK(farkas_valid(p, *res.certificate));
    CHECK(res.certificate->multipliers == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("solve_feasibility: simple feasible systems") {
    LinProblem p;
    p.add_var("x");
    p.add_var("y");
    p.add({Rational(1), Rational(1)}, Relation::Eq, Rational(2));
    p.add({Rational(1), Rational(0)}, Relation::Ge, Rational(0));
    p.add({Rational(0), Rational(1)}, Relation::Ge, Rational(0));
    LpResult res = solve_feasibility(p);
    REQUIRE(res.feasible());
    CHECK(satisfies(p, res.point->values));

    LinProblem q;
    q.add_var("x");
    q.add({Rational(3)}, Relation::Le, Rational(1));
    q.add({Rational(-3)}, Relation::Le, Rational(-1));
    LpResult r2 = solve_feasibility(q);
    REQUIRE(r2.feasible());
    CHECK(r2.point->values[0] == Rational(1, 3));  // forced exact value
}

TEST_CASE("solve_feasibility: dimension mismatch is rejected") {
    LinProblem p;
    p.add_var("x");
    p.add_var("y");
    p.rows.push_back(LinConstraint{{Rational(1)}, Relation::Le, Rational(0)});
    CHECK_THROWS_AS(solve_feasibility(p), Error);
}

TEST_CASE("solve_feasibility: random systems re-verify exactly") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> nvars(1, 4), nrows(1, 8), coeff(-4, 4), rel(0, 2);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        LinProblem p;
        int n = nvars(rng);
        for (int v = 0; v < n; ++v) p.add_var("v" + std::to_string(v));
        int m = nrows(rng);
        for (int r = 0; r < m; ++r) {
            std::vector<Rational> row;
            for (int v = 0; v < n; ++v) row.push_back(Rational(coeff(rng)));
            p.add(std::move(row), static_cast<Relation>(rel(rng)), Rational(coeff(rng)));
        }
        LpResult res = solve_feasibility(p);
        if (res.feasible()) {
            ++feasible_seen;
            CHECK(satisfies(p, res.point->values));
        } else {
            ++infeasible_seen;
            REQUIRE(res.certificate);
            CHECK(farkas_valid(p, *res.certificate));
            // The certificate is normalized to prove 0 <= -1.
            Rational rhs(0);
            for (size_t j = 0; j < p.rows.size(); ++j) {
                Rational s = p.rows[j].rel == Relation::Ge ? Rational(-1) : Rational(1);
                rhs += res.certificate->multipliers[j] * s * p.rows[j].rhs;
            }
            CHECK(rhs == Rational(-1));
        }
    }
    CHECK(feasible_seen > 50);
    CHECK(infeasible_seen > 50);
}

TEST_CASE("solve_feasibility: equality chains propagate exactly") {
    // x0 = 7/3, x_{i+1} = x_i + i; all equalities, handled by presolve.
    LinProblem p;
    const int n = 6;
    for (int i = 0; i < n; ++i) p.add_var("x" + std::to_string(i));
    {
        std::vector<Rational> row(n, Rational(0));
        row[0] = 1;
        p.add(std::move(row), Relation::Eq, Rational(7, 3));
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> row(n, Rational(0));
        row[i] = -1;
        row[i + 1] = 1;
        p.add(std::move(row), Relation::Eq, Rational(i));
    }
    LpResult res = solve_feasibility(p);
    REQUIRE(res.feasible());
    Rational want(7, 3);
    for (int i = 0; i < n; ++i) {
        CHECK(res.point->values[i] == want);
        want += i;
    }
}
