#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetspace/variable.hpp"

namespace jetspace {

// Power product; factors sorted by descending variable rank, all exponents positive.
struct Monomial {
    std::vector<std::pair<VariableId, std::uint32_t>> factors;

    static Monomial one() { return Monomial{}; }
    static Monomial variable(VariableId v, std::uint32_t exp = 1);
    static Monomial from_powers(std::vector<std::pair<VariableId, std::uint32_t>> powers);

    bool is_one() const { return factors.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_of(VariableId v) const;

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    std::optional<Monomial> divided_by(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime_with(const Monomial& o) const;

    std::string to_string() const;

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors == y.factors; }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace jetspace
