#include "rectplan/lp.hpp"

#include <algorithm>
#include <cassert>

#include "rectplan/error.hpp"

namespace rectplan {

size_t LinProblem::add_var(std::string name) {
    vars.push_back(std::move(name));
    return vars.size() - 1;
}

void LinProblem::add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    rows.push_back(LinConstraint{std::move(coeffs), rel, std::move(rhs)});
}

bool satisfies(const LinProblem& p, const std::vector<Rational>& x) {
    if (x.size() != p.vars.size()) return false;
    for (const LinConstraint& c : p.rows) {
        Rational lhs(0);
        for (size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
        switch (c.rel) {
            case Relation::Le: if (!(lhs <= c.rhs)) return false; break;
            case Relation::Eq: if (!(lhs == c.rhs)) return false; break;
            case Relation::Ge: if (!(lhs >= c.rhs)) return false; break;
        }
    }
    return true;
}

bool farkas_valid(const LinProblem& p, const FarkasCertificate& cert) {
    if (cert.multipliers.size() != p.rows.size()) return false;
    const size_t n = p.vars.size();
    std::vector<Rational> combo(n, Rational(0));
    Rational rhs(0);
    for (size_t j = 0; j < p.rows.size(); ++j) {
        const LinConstraint& c = p.rows[j];
        Rational m = cert.multipliers[j];
        if (c.rel != Relation::Eq && sgn(m) < 0) return false;
        Rational s = (c.rel == Relation::Ge) ? Rational(-1) : Rational(1);
        for (size_t i = 0; i < n; ++i) combo[i] += m * s * c.coeffs[i];
        rhs += m * s * c.rhs;
    }
    for (const Rational& v : combo)
        if (sgn(v) != 0) return false;
    return sgn(rhs) < 0;
}

namespace {

// Working row: <=-normalized coefficients plus the combination of original
// (normalized) rows it currently equals, for certificate lifting.
struct WorkRow {
    std::vector<Rational> a;
    Rational b;
    bool is_eq;
    std::vector<Rational> combo;  // over original rows
};

struct Tableau {
    // Columns: u_0..u_{n-1}, w_0..w_{n-1}, slacks, artificials; entries are
    // stored per row together with the rhs.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;        // phase-1 objective coefficients
    std::vector<Rational> reduced;     // current reduced-cost row
    Rational objective{0};
    std::vector<size_t> basis;         // basic column per row
};

}  // namespace

LpResult solve_feasibility(const LinProblem& p) {
    const size_t n = p.vars.size();
    const size_t m0 = p.rows.size();
    for (const LinConstraint& c : p.rows)
        if (c.coeffs.size() != n)
            fail("DimensionMismatch", "constraint has " + std::to_string(c.coeffs.size()) +
                                          " coefficients for " + std::to_string(n) + " variables");

    // Normalize >= rows to <= and set up combo tracking.
    std::vector<WorkRow> work;
    work.reserve(m0);
    for (size_t j = 0; j < m0; ++j) {
        const LinConstraint& c = p.rows[j];
        WorkRow r;
        r.is_eq = (c.rel == Relation::Eq);
        Rational s = (c.rel == Relation::Ge) ? Rational(-1) : Rational(1);
        r.a.reserve(n);
        for (const Rational& q : c.coeffs) r.a.push_back(s * q);
        r.b = s * c.rhs;
        r.combo.assign(m0, Rational(0));
        r.combo[j] = 1;
        work.push_back(std::move(r));
    }

    auto lift_certificate = [&](const std::vector<std::pair<size_t, Rational>>& parts)
        -> FarkasCertificate {
        std::vector<Rational> M(m0, Rational(0));
        Rational total(0);
        for (const auto& [row, mult] : parts) {
            for (size_t j = 0; j < m0; ++j) M[j] += mult * work[row].combo[j];
            total += mult * work[row].b;
        }
        // Scale so the combined rhs is exactly -1.
        assert(sgn(total) < 0);
        for (Rational& q : M) q /= -total;
        FarkasCertificate cert{std::move(M)};
        assert(farkas_valid(p, cert));
        return cert;
    };

    // --- Presolve: eliminate variables through equality rows. -------------
    std::vector<bool> row_used(work.size(), false);    // used as a pivot
    std::vector<bool> var_eliminated(n, false);
    std::vector<std::pair<size_t, size_t>> definitions;  // (row, var)

    for (;;) {
        // Prefer unit pivots to keep numbers small.
        size_t best_row = work.size(), best_var = n;
        int best_score = 3;
        for (size_t r = 0; r < work.size(); ++r) {
            if (row_used[r] || !work[r].is_eq) continue;
            for (size_t v = 0; v < n; ++v) {
                if (var_eliminated[v] || sgn(work[r].a[v]) == 0) continue;
                int score = (abs(work[r].a[v]) == 1) ? 0 : 1;
                if (score < best_score) {
                    best_score = score;
                    best_row = r;
                    best_var = v;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_row == work.size()) break;

        WorkRow& pr = work[best_row];
        Rational piv = pr.a[best_var];
        for (Rational& q : pr.a) q /= piv;
        pr.b /= piv;
        for (Rational& q : pr.combo) q /= piv;
        for (size_t r = 0; r < work.size(); ++r) {
            if (r == best_row) continue;
            Rational f = work[r].a[best_var];
            if (sgn(f) == 0) continue;
            for (size_t v = 0; v < n; ++v) work[r].a[v] -= f * pr.a[v];
            work[r].b -= f * pr.b;
            for (size_t j = 0; j < m0; ++j) work[r].combo[j] -= f * pr.combo[j];
        }
        row_used[best_row] = true;
        var_eliminated[best_var] = true;
        definitions.push_back({best_row, best_var});
    }

    // Surviving rows; catch trivial verdicts (0 = c, 0 <= c).
    std::vector<size_t> active;
    for (size_t r = 0; r < work.size(); ++r) {
        if (row_used[r]) continue;
        bool all_zero = true;
        for (size_t v = 0; v < n; ++v)
            if (!var_eliminated[v] && sgn(work[r].a[v]) != 0) { all_zero = false; break; }
        if (all_zero) {
            bool infeasible = work[r].is_eq ? (sgn(work[r].b) != 0) : (sgn(work[r].b) < 0);
            if (infeasible) {
                Rational mult = work[r].is_eq ? (sgn(work[r].b) > 0 ? Rational(-1) : Rational(1))
                                              : Rational(1);
                return LpResult{std::nullopt, lift_certificate({{r, mult}})};
            }
            continue;
        }
        active.push_back(r);
    }

    std::vector<size_t> live_vars;
    for (size_t v = 0; v < n; ++v)
        if (!var_eliminated[v]) live_vars.push_back(v);

    // --- Phase-1 simplex over u - w splits of the live variables. ---------
    const size_t nl = live_vars.size();
    const size_t m = active.size();
    size_t n_slack = 0;
    for (size_t r : active)
        if (!work[r].is_eq) ++n_slack;

    // Column layout: [u | w | slacks | artificials].
    const size_t col_u = 0, col_w = nl, col_s = 2 * nl;
    std::vector<int> row_sigma(m, 1);
    std::vector<long> slack_col(m, -1), art_col(m, -1);

    size_t next_slack = 0;
    size_t n_art = 0;
    // First pass to count artificials.
    for (size_t i = 0; i < m; ++i) {
        const WorkRow& r = work[active[i]];
        int sigma = sgn(r.b) < 0 ? -1 : 1;
        bool need_art = r.is_eq || sigma < 0;
        if (need_art) ++n_art;
    }
    const size_t col_a = col_s + n_slack;
    const size_t width = col_a + n_art;

    Tableau t;
    t.rows.assign(m, std::vector<Rational>(width, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.cost.assign(width, Rational(0));
    t.basis.assign(m, 0);

    size_t next_art = 0;
    for (size_t i = 0; i < m; ++i) {
        const WorkRow& r = work[active[i]];
        int sigma = sgn(r.b) < 0 ? -1 : 1;
        row_sigma[i] = sigma;
        for (size_t lv = 0; lv < nl; ++lv) {
            Rational q = Rational(sigma) * r.a[live_vars[lv]];
            t.rows[i][col_u + lv] = q;
            t.rows[i][col_w + lv] = -q;
        }
        t.rhs[i] = Rational(sigma) * r.b;
        if (!r.is_eq) {
            slack_col[i] = static_cast<long>(col_s + next_slack++);
            t.rows[i][slack_col[i]] = Rational(sigma);
        }
        if (r.is_eq || sigma < 0) {
            art_col[i] = static_cast<long>(col_a + next_art++);
            t.rows[i][art_col[i]] = 1;
            t.cost[art_col[i]] = 1;
            t.basis[i] = static_cast<size_t>(art_col[i]);
        } else {
            t.basis[i] = static_cast<size_t>(slack_col[i]);
        }
    }

    // Reduced costs r_j = c_j - sum over basic rows of c_basis * row; with a
    // basis of slacks (cost 0) and artificials (cost 1):
    t.reduced = t.cost;
    t.objective = 0;
    for (size_t i = 0; i < m; ++i) {
        if (art_col[i] < 0) continue;
        for (size_t j = 0; j < width; ++j) t.reduced[j] -= t.rows[i][j];
        t.objective += t.rhs[i];
    }

    // Bland's rule: entering column of smallest index with negative reduced
    // cost; leaving row by exact min ratio, ties by smallest basic column.
    for (;;) {
        size_t enter = width;
        for (size_t j = 0; j < width; ++j)
            if (sgn(t.reduced[j]) < 0) { enter = j; break; }
        if (enter == width) break;

        size_t leave = m;
        Rational best_ratio;
        for (size_t i = 0; i < m; ++i) {
            if (sgn(t.rows[i][enter]) <= 0) continue;
            Rational ratio = t.rhs[i] / t.rows[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            fail("InternalError", "phase-1 objective unbounded below zero");

        // Pivot.
        Rational piv = t.rows[leave][enter];
        for (size_t j = 0; j < width; ++j) t.rows[leave][j] /= piv;
        t.rhs[leave] /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            Rational f = t.rows[i][enter];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j < width; ++j) t.rows[i][j] -= f * t.rows[leave][j];
            t.rhs[i] -= f * t.rhs[leave];
        }
        Rational fr = t.reduced[enter];
        if (sgn(fr) != 0) {
            for (size_t j = 0; j < width; ++j) t.reduced[j] -= fr * t.rows[leave][j];
            t.objective -= fr * t.rhs[leave];
        }
        t.basis[leave] = enter;
    }

    if (sgn(t.objective) > 0) {
        // Simplex multipliers y_i, recovered from reduced costs: artificial
        // column of row i has r = 1 - y_i; a slack column has r = -sigma*y_i.
        std::vector<std::pair<size_t, Rational>> parts;
        for (size_t i = 0; i < m; ++i) {
            Rational y;
            if (art_col[i] >= 0)
                y = Rational(1) - t.reduced[static_cast<size_t>(art_col[i])];
            else
                y = -Rational(row_sigma[i]) * t.reduced[static_cast<size_t>(slack_col[i])];
            Rational mu = Rational(row_sigma[i]) * y;  // multiplier on the work row
            if (sgn(mu) != 0) parts.push_back({active[i], -mu});
        }
        return LpResult{std::nullopt, lift_certificate(parts)};
    }

    // Feasible: read the live variables, then back-substitute definitions.
    std::vector<Rational> x(n, Rational(0));
    std::vector<Rational> colval(width, Rational(0));
    for (size_t i = 0; i < m; ++i) colval[t.basis[i]] = t.rhs[i];
    for (size_t lv = 0; lv < nl; ++lv)
        x[live_vars[lv]] = colval[col_u + lv] - colval[col_w + lv];
    for (auto it = definitions.rbegin(); it != definitions.rend(); ++it) {
        const WorkRow& d = work[it->first];
        Rational v = d.b;
        for (size_t j = 0; j < n; ++j)
            if (j != it->second && sgn(d.a[j]) != 0) v -= d.a[j] * x[j];
        x[it->second] = v;  // pivot coefficient is 1 after normalization
    }
    FeasiblePoint pt{std::move(x)};
    assert(satisfies(p, pt.values));
    return LpResult{std::move(pt), std::nullopt};
}

}  // namespace rectplan
