#include "jetspace/weights.hpp"

#include <algorithm>
#include <utility>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

void check_width(const LinearForm& x, const LinearForm& y) {
    if (x.coeffs.size() != y.coeffs.size()) throw engine_error("linear form width mismatch");
}

}  // namespace

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    check_width(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    constant += o.constant;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    check_width(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    constant -= o.constant;
    return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
    for (Rational& a : coeffs) a *= c;
    constant *= c;
    return *this;
}

LinearForm operator-(const LinearForm& x) {
    LinearForm out(x.coeffs.size());
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.coeffs[i] = -x.coeffs[i];
    out.constant = -x.constant;
    return out;
}

bool LinearForm::is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != coeffs.size()) throw engine_error("evaluation point width mismatch");
    Rational out = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * point[i];
    return out;
}

WeightConstraint constrain_eq(LinearForm form) { return {std::move(form), Relation::eq}; }
WeightConstraint constrain_ge(LinearForm form) { return {std::move(form), Relation::ge}; }
WeightConstraint constrain_gt(LinearForm form) { return {std::move(form), Relation::gt}; }

void WeightConstraintSystem::add(WeightConstraint c) {
    if (c.form.coeffs.size() != symbols) throw engine_error("constraint width mismatch");
    rows.push_back(std::move(c));
}

bool WeightConstraintSystem::satisfied_by(const std::vector<Rational>& point) const {
    for (const WeightConstraint& c : rows) {
        Rational v = c.form.evaluate(point);
        switch (c.rel) {
            case Relation::eq:
                if (v != 0) return false;
                break;
            case Relation::ge:
                if (v < 0) return false;
                break;
            case Relation::gt:
                if (v <= 0) return false;
                break;
        }
    }
    return true;
}

namespace {

struct Substitution {
    std::size_t var = 0;
    LinearForm expr;  // x_var = expr over the remaining symbols
};

struct Bound {
    Rational value;
    bool strict = false;
};

// Rows bounding the variable eliminated at one Fourier-Motzkin stage.
struct Stage {
    std::size_t var = 0;
    std::vector<WeightConstraint> rows;
};

}  // namespace

std::optional<std::vector<Rational>> feasible_point(const WeightConstraintSystem& sys,
                                                    const FeasibilityBudget& budget) {
    const std::size_t n = sys.symbols;
    std::vector<WeightConstraint> rows = sys.rows;
    std::vector<bool> eliminated(n, false);

    // Equality substitution: solve each equality for its highest-index symbol.
    std::vector<Substitution> substitutions;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].rel != Relation::eq) continue;
            std::size_t pivot = n;
            for (std::size_t j = n; j-- > 0;) {
                if (rows[r].form.coeffs[j] != 0) {
                    pivot = j;
                    break;
                }
            }
            if (pivot == n) {
                if (rows[r].form.constant != 0) return std::nullopt;
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
                changed = true;
                break;
            }
            Rational lead = rows[r].form.coeffs[pivot];
            LinearForm expr = rows[r].form * (Rational(-1) / lead);
            expr.coeffs[pivot] = 0;
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
            for (WeightConstraint& other : rows) {
                Rational c = other.form.coeffs[pivot];
                if (c == 0) continue;
                other.form.coeffs[pivot] = 0;
                other.form += expr * c;
            }
            substitutions.push_back(Substitution{pivot, std::move(expr)});
            eliminated[pivot] = true;
            changed = true;
            break;
        }
    }

    // Fourier-Motzkin elimination, highest surviving index first.
    std::vector<Stage> stages;
    for (std::size_t j = n; j-- > 0;) {
        if (eliminated[j]) continue;
        Stage stage;
        stage.var = j;
        std::vector<WeightConstraint> remaining;
        std::vector<const WeightConstraint*> lower, upper;
        for (WeightConstraint& row : rows) {
            if (row.form.coeffs[j] == 0) {
                remaining.push_back(std::move(row));
            } else {
                stage.rows.push_back(std::move(row));
            }
        }
        for (const WeightConstraint& row : stage.rows) {
            (row.form.coeffs[j] > 0 ? lower : upper).push_back(&row);
        }
        for (const WeightConstraint* lo : lower) {
            for (const WeightConstraint* up : upper) {
                Rational a = lo->form.coeffs[j];
                Rational b = -up->form.coeffs[j];
                WeightConstraint combined;
                combined.form = lo->form * b + up->form * a;
                combined.form.coeffs[j] = 0;
                combined.rel = (lo->rel == Relation::gt || up->rel == Relation::gt) ? Relation::gt
                                                                                    : Relation::ge;
                remaining.push_back(std::move(combined));
                if (remaining.size() > budget.max_rows) {
                    throw budget_exceeded("fourier-motzkin rows", remaining.size());
                }
            }
        }
        rows = std::move(remaining);
        stages.push_back(std::move(stage));
    }

    // Ground rows: constants only.
    for (const WeightConstraint& row : rows) {
        const Rational& c = row.form.constant;
        if (row.rel == Relation::ge && c < 0) return std::nullopt;
        if (row.rel == Relation::gt && c <= 0) return std::nullopt;
    }

    // Back-substitution with midpoints; strict bounds are kept strictly.
    std::vector<Rational> point(n);
    for (std::size_t s = stages.size(); s-- > 0;) {
        const Stage& stage = stages[s];
        std::optional<Bound> low, high;
        for (const WeightConstraint& row : stage.rows) {
            Rational a = row.form.coeffs[stage.var];
            LinearForm rest = row.form;
            rest.coeffs[stage.var] = 0;
            Rational bound = -rest.evaluate(point) / a;
            bool strict = row.rel == Relation::gt;
            if (a > 0) {
                if (!low || bound > low->value || (bound == low->value && strict)) {
                    low = Bound{bound, strict};
                }
            } else {
                if (!high || bound < high->value || (bound == high->value && strict)) {
                    high = Bound{bound, strict};
                }
            }
        }
        Rational value;
        if (low && high) {
            if (low->value == high->value) {
                if (low->strict || high->strict) throw engine_error("empty interval after elimination");
                value = low->value;
            } else {
                value = (low->value + high->value) / 2;
            }
        } else if (low) {
            value = low->value + 1;
        } else if (high) {
            value = high->value - 1;
        } else {
            value = 1;
        }
        point[stage.var] = value;
    }
    for (std::size_t s = substitutions.size(); s-- > 0;) {
        point[substitutions[s].var] = substitutions[s].expr.evaluate(point);
    }

    if (!sys.satisfied_by(point)) throw engine_error("reconstructed point violates the system");
    return point;
}

bool entails(const WeightConstraintSystem& sys, const WeightConstraint& c,
             const FeasibilityBudget& budget) {
    auto refuted = [&](WeightConstraint negation) {
        WeightConstraintSystem augmented = sys;
        augmented.add(std::move(negation));
        return !feasible_point(augmented, budget).has_value();
    };
    switch (c.rel) {
        case Relation::ge:
            return refuted(constrain_gt(-c.form));
        case Relation::gt:
            return refuted(constrain_ge(-c.form));
        case Relation::eq:
            return refuted(constrain_gt(c.form)) && refuted(constrain_gt(-c.form));
    }
    return false;
}

}  // namespace jetspace
