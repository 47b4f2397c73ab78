#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jetspace/rational.hpp"

namespace jetspace {

// Affine form sum_i coeffs[i] * x_i + constant over a fixed symbol ordering.
struct LinearForm {
    std::vector<Rational> coeffs;
    Rational constant;

    LinearForm() = default;
    explicit LinearForm(std::size_t symbols) : coeffs(symbols) {}

    bool operator==(const LinearForm&) const = default;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& c);
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
    friend LinearForm operator*(LinearForm x, const Rational& c) { return x *= c; }
    friend LinearForm operator-(const LinearForm& x);

    bool is_constant() const;
    Rational evaluate(const std::vector<Rational>& point) const;
};

// form = 0, form >= 0, or form > 0.
enum class Relation { eq, ge, gt };

struct WeightConstraint {
    LinearForm form;
    Relation rel = Relation::ge;
};

WeightConstraint constrain_eq(LinearForm form);
WeightConstraint constrain_ge(LinearForm form);
WeightConstraint constrain_gt(LinearForm form);

struct WeightConstraintSystem {
    std::size_t symbols = 0;
    std::vector<WeightConstraint> rows;

    explicit WeightConstraintSystem(std::size_t n = 0) : symbols(n) {}
    void add(WeightConstraint c);
    bool satisfied_by(const std::vector<Rational>& point) const;
};

struct FeasibilityBudget {
    std::uint64_t max_rows = 50000;
};

// Exact Fourier-Motzkin elimination. Equalities are substituted away first,
// then variables are eliminated highest index first; a witness is rebuilt by
// midpoint back-substitution. Returns nullopt when infeasible.
std::optional<std::vector<Rational>> feasible_point(const WeightConstraintSystem& sys,
                                                    const FeasibilityBudget& budget = {});

// True when sys forces c to hold (the negation is infeasible together with sys).
bool entails(const WeightConstraintSystem& sys, const WeightConstraint& c,
             const FeasibilityBudget& budget = {});

}  // namespace jetspace
