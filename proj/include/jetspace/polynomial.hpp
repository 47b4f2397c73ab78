#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetspace/monomial.hpp"
#include "jetspace/monomial_order.hpp"
#include "jetspace/rational.hpp"

namespace jetspace {

struct Term {
    Monomial mono;
    GaussianRational coeff;

    friend bool operator==(const Term& x, const Term& y) {
        return x.mono == y.mono && x.coeff == y.coeff;
    }
};

// Terms sorted strictly descending under the canonical order, no zero coefficients;
// equal polynomials therefore have identical representations.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(GaussianRational c);
    static Polynomial variable(VariableId v);
    static Polynomial from_monomial(Monomial m, GaussianRational c = GaussianRational(1));
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    GaussianRational constant_value() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(Polynomial x, const GaussianRational& c) { return x *= c; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial x) { return x *= c; }
    friend Polynomial operator-(const Polynomial& x);

    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

    Polynomial pow(std::uint32_t e) const;

    // Variables not listed map to themselves.
    Polynomial substitute(const std::map<VariableId, Polynomial>& assignment) const;
    Polynomial partial_derivative(VariableId v) const;
    // Every variable occurring in the polynomial must be assigned.
    GaussianRational evaluate(const std::map<VariableId, GaussianRational>& assignment) const;

    Rational weighted_order(const WeightVector& w) const;
    Polynomial leading_form(const WeightVector& w) const;
    std::optional<Rational> is_weighted_homogeneous(const WeightVector& w) const;

    std::vector<VariableId> variables() const;
    std::optional<std::uint32_t> max_jet_index(Family f) const;
    std::optional<std::uint64_t> total_degree() const;
    const Term& leading_term(const MonomialOrder& order) const;

    std::string to_string() const;

  private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace jetspace
