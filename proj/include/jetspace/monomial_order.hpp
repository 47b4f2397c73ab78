#pragma once

#include <compare>
#include <map>
#include <vector>

#include "jetspace/monomial.hpp"
#include "jetspace/rational.hpp"

namespace jetspace {

// Variables absent from the map have weight zero.
struct WeightVector {
    std::map<VariableId, Rational> weights;

    Rational weight_of(VariableId v) const {
        auto it = weights.find(v);
        return it == weights.end() ? Rational(0) : it->second;
    }
};

Rational weighted_degree(const Monomial& m, const WeightVector& w);

struct MonomialOrder {
    enum class Kind { grevlex, lex, block_elimination };

    Kind kind = Kind::grevlex;
    // Eliminated variables; any monomial involving one exceeds every monomial in the
    // remaining variables. Sorted ascending for lookup.
    std::vector<VariableId> front;

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::lex, {}}; }
    static MonomialOrder block_elimination(std::vector<VariableId> front_vars);

    bool in_front(VariableId v) const;
    std::strong_ordering compare(const Monomial& x, const Monomial& y) const;
    bool less(const Monomial& x, const Monomial& y) const { return compare(x, y) < 0; }
};

// Canonical order used for the normalized term list of every polynomial.
std::strong_ordering canonical_compare(const Monomial& x, const Monomial& y);

}  // namespace jetspace
