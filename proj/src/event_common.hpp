#pragma once

// Shared machinery for the event-sequence LP solvers: symbolic affine
// expressions over LP variables, constraint emission, and the displacement
// cone tests used to prune event sequences before any LP is formed.

#include <algorithm>
#include <utility>
#include <vector>

#include "rectplan/instance.hpp"
#include "rectplan/lp.hpp"

namespace rectplan::detail {

// Affine form c + sum(coeff * var), terms sorted by variable index.
struct Affine {
    Rational c;
    std::vector<std::pair<size_t, Rational>> terms;

    Affine() : c(0) {}
    explicit Affine(Rational k) : c(std::move(k)) {}
    static Affine var(size_t v) {
        Affine a;
        a.terms.push_back({v, Rational(1)});
        return a;
    }

    Affine& operator+=(const Affine& o) {
        c += o.c;
        std::vector<std::pair<size_t, Rational>> merged;
        merged.reserve(terms.size() + o.terms.size());
        size_t i = 0, j = 0;
        while (i < terms.size() || j < o.terms.size()) {
            if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
                merged.push_back(terms[i++]);
            } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
                merged.push_back(o.terms[j++]);
            } else {
                Rational s = terms[i].second + o.terms[j].second;
                if (sgn(s) != 0) merged.push_back({terms[i].first, std::move(s)});
                ++i;
                ++j;
            }
        }
        terms = std::move(merged);
        return *this;
    }
    Affine& operator-=(const Affine& o) { return *this += o * Rational(-1); }
    Affine& operator+=(const Rational& k) { c += k; return *this; }
    Affine& operator-=(const Rational& k) { c -= k; return *this; }

    friend Affine operator+(Affine a, const Affine& b) { a += b; return a; }
    friend Affine operator-(Affine a, const Affine& b) { a -= b; return a; }
    friend Affine operator+(Affine a, const Rational& k) { a += k; return a; }
    friend Affine operator-(Affine a, const Rational& k) { a -= k; return a; }
    Affine operator-() const { return *this * Rational(-1); }
    Affine operator*(const Rational& k) const {
        Affine r;
        if (sgn(k) == 0) return r;
        r.c = c * k;
        r.terms.reserve(terms.size());
        for (const auto& [v, q] : terms) r.terms.push_back({v, q * k});
        return r;
    }
};

struct AffinePoint {
    Affine x;
    Affine y;
};

class LpBuilder {
public:
    size_t add_var(std::string name) { return p_.add_var(std::move(name)); }

    void add(const Affine& lhs, Relation rel, const Affine& rhs) {
        std::vector<Rational> coeffs(p_.vars.size(), Rational(0));
        Affine d = lhs - rhs;
        for (const auto& [v, q] : d.terms) coeffs.at(v) = q;
        p_.add(std::move(coeffs), rel, -d.c);
    }
    void le(const Affine& a, const Affine& b) { add(a, Relation::Le, b); }
    void ge(const Affine& a, const Affine& b) { add(a, Relation::Ge, b); }
    void eq(const Affine& a, const Affine& b) { add(a, Relation::Eq, b); }

    size_t row_count() const { return p_.rows.size(); }
    void truncate_rows(size_t n) { p_.rows.resize(n); }
    LinProblem& problem() { return p_; }
    const LinProblem& problem() const { return p_; }

private:
    LinProblem p_;
};

// Is d in the conic hull of `gens` (nonnegative combinations)? Exact; by
// Caratheodory in the plane it suffices to scan rays and independent pairs.
bool in_cone(const Vec2& d, const std::vector<Vec2>& gens);

// Minimum number of extra direction picks from `avail` that robot displacement
// d still needs, given the already chosen multiset `chosen`. Returns 0, 1, 2
// or -1 when no two picks can ever work.
int cone_deficit(const Vec2& d, const std::vector<Vec2>& chosen, const std::vector<Vec2>& avail);

// Boxed instances: an axis whose box extent equals the robot extent admits no
// motion at all, so events along it can be dropped up front.
struct AxisPins {
    std::vector<bool> x_pinned;
    std::vector<bool> y_pinned;
};
AxisPins compute_axis_pins(const Instance& inst);

}  // namespace rectplan::detail
