#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectplan/rational.hpp"

namespace rectplan {

enum class Relation { Le, Eq, Ge };

struct LinConstraint {
    std::vector<Rational> coeffs;  // one per variable
    Relation rel;
    Rational rhs;
};

// Feasibility system over free rational variables. No strict relations; no
// objective (the solvers optimize schedule length outside the LP).
struct LinProblem {
    std::vector<std::string> vars;
    std::vector<LinConstraint> rows;

    size_t add_var(std::string name);
    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

struct FeasiblePoint {
    std::vector<Rational> values;  // one per variable, exact
};

// Nonnegative combination proving 0 <= -1: one multiplier per row, to be
// applied to the row's <=-normalized form (>= rows are negated first);
// multipliers on inequality rows are >= 0, equality rows are free-signed.
// Scaled so the combined right-hand side is exactly -1.
struct FarkasCertificate {
    std::vector<Rational> multipliers;
};

struct LpResult {
    std::optional<FeasiblePoint> point;         // set iff feasible
    std::optional<FarkasCertificate> certificate;  // set iff infeasible
    bool feasible() const { return point.has_value(); }
};

// Exact rational phase-1 simplex with Bland's rule; equality rows are first
// reduced away by exact Gaussian elimination (certificates are lifted back
// through the elimination). Throws Error("DimensionMismatch") on malformed
// input. No floating point anywhere.
LpResult solve_feasibility(const LinProblem& p);

// Exact re-evaluation helpers used by tests.
bool satisfies(const LinProblem& p, const std::vector<Rational>& x);
bool farkas_valid(const LinProblem& p, const FarkasCertificate& cert);

}  // namespace rectplan
