#pragma once

#include <cstdint>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

struct GroebnerBudget {
    std::uint64_t max_basis = 4096;
    std::uint64_t max_reductions = 4000000;
};

// Ideal with a cached reduced Groebner basis: monic generators, no leading term
// dividing another, tails fully reduced, sorted ascending by leading term.
class IdealHandle {
  public:
    explicit IdealHandle(std::vector<Polynomial> generators,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         GroebnerBudget budget = GroebnerBudget{});

    const std::vector<Polynomial>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    const GroebnerBudget& budget() const { return budget_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    // Ambient variables; defaults to every variable of the generators.
    const std::vector<VariableId>& ambient() const { return ambient_; }

    IdealHandle with_ambient(std::vector<VariableId> ambient) const;

  private:
    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    GroebnerBudget budget_;
    std::vector<Polynomial> basis_;
    std::vector<VariableId> ambient_;
};

IdealHandle buchberger(std::vector<Polynomial> generators,
                       MonomialOrder order = MonomialOrder::grevlex(),
                       GroebnerBudget budget = GroebnerBudget{});

struct DivisionWitness {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // aligned with I.basis()
};

DivisionWitness divide_with_witness(const Polynomial& p, const IdealHandle& I);
Polynomial normal_form(const Polynomial& p, const IdealHandle& I);
bool is_member(const Polynomial& p, const IdealHandle& I);
bool is_unit_ideal(const IdealHandle& I);
bool same_ideal(const IdealHandle& I, const IdealHandle& J);

IdealHandle eliminate(const IdealHandle& I, const std::vector<VariableId>& kill);

struct SaturationResult {
    IdealHandle ideal;
    // d^exponent_bound times each new basis element lies in the input ideal.
    std::uint64_t exponent_bound = 0;
};

SaturationResult saturate(const IdealHandle& I, const Polynomial& d);

// Saturation of I + (g) by the product of the remaining leading-form factors.
IdealHandle distinguished_ideal(const IdealHandle& I, const Polynomial& g,
                                const std::vector<Polynomial>& other_factors);

// Krull dimension of the quotient by I inside its ambient variable set, via
// maximal sets of variables independent modulo the leading term ideal.
std::uint64_t ideal_dimension(const IdealHandle& I);

}  // namespace jetspace
