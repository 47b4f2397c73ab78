#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

// Hypersurface germ through the origin: nonzero, no constant or linear part,
// written in the auxiliary variables x, y, z.
struct SurfaceEquation {
    Polynomial f;

    explicit SurfaceEquation(Polynomial poly);
};

struct DivisorRecord {
    std::string name;
    std::array<std::uint64_t, 3> mu{1, 1, 1};  // multiplicities of x, y, z
    std::map<std::string, std::uint64_t> test_orders;

    std::uint64_t mu_x() const { return mu[0]; }
    std::uint64_t mu_y() const { return mu[1]; }
    std::uint64_t mu_z() const { return mu[2]; }
};

// Coefficients f_1..f_k of t^1..t^k in F(x(t), y(t), z(t)) with
// x(t) = a_1 t + ... + a_k t^k and likewise for y, z.
struct JetSystem {
    Polynomial surface;
    std::uint64_t k = 0;
    std::vector<Polynomial> equations;  // equations[l-1] = f_l

    const Polynomial& at(std::uint64_t level) const;
};

struct FamilyEquation {
    std::uint64_t u = 0;
    Polynomial f;
};

// Jet equations restricted to the family of arcs with contact mu: the low jet
// coefficients are set to zero and only the levels o..min(o_k, k) survive.
struct FamilySystem {
    DivisorRecord divisor;
    std::uint64_t k = 0;
    std::uint64_t o = 0;    // order of the surface along the family
    std::uint64_t o_k = 0;  // truncation bound for the reduced equations
    std::vector<FamilyEquation> reduced;
    std::vector<VariableId> vanishing;

    const Polynomial& at(std::uint64_t u) const;
};

struct LeadingFactor {
    Polynomial factor;
    std::uint32_t multiplicity = 1;
};

struct LeadingFactorization {
    std::vector<LeadingFactor> factors;
    bool split = false;  // true when a genuine factorization was found
};

// One coordinate series in the second parameter s. A plain entry stands for
// v + sum_{p >= max(1, start)} v_p s^p with the constant term dropped when
// start >= 1; a normalized entry stands for exactly s^start.
struct SeriesSpec {
    std::uint64_t start = 0;
    bool normalized = false;
};

struct WedgeExpansion {
    std::uint64_t k = 0;
    std::uint64_t depth = 0;
    std::map<std::uint64_t, std::vector<Polynomial>> coefficients;  // u -> [v = 0..depth]

    const Polynomial& at(std::uint64_t u, std::uint64_t v) const;
};

struct ThetaExtraction {
    std::uint64_t theta = 0;
    Polynomial g;
};

JetSystem expand_jet(const SurfaceEquation& eq, std::uint64_t k);

// Coefficients of t^0..t^k of fn(x(t), y(t), z(t)) for an arbitrary polynomial
// in x, y, z; no shape restrictions beyond the variable set.
std::vector<Polynomial> expand_function(const Polynomial& fn, std::uint64_t k);

// Returns (o, o_k): the minimal mu-weighted degree of the surface equation and
// the minimum over its monomials of the three coefficient-shifted weights plus k.
std::pair<std::uint64_t, std::uint64_t> contact_orders(const SurfaceEquation& eq,
                                                       const DivisorRecord& d, std::uint64_t k);

FamilySystem reduce_to_family(const JetSystem& js, const DivisorRecord& d);

// Splits v^2 + w^(2e) into (v + i w^e)(v - i w^e); anything else is returned
// unfactored with split = false.
LeadingFactorization factor_leading_form(const Polynomial& p);

bool verify_claimed_factorization(const Polynomial& p, const std::vector<LeadingFactor>& claimed);

// Checks that each f_{r+i} minus the three first-order derivative terms of f_r
// only involves jet indices strictly below the shifted leading indices.
bool verify_recursion(const FamilySystem& fs);

// Coefficients of s^0..s^depth of p with every key of series replaced by its
// series in s; unmapped variables stay constant in s.
std::vector<Polynomial> expand_in_s(const Polynomial& p,
                                    const std::map<VariableId, SeriesSpec>& series,
                                    std::uint64_t depth);

WedgeExpansion expand_wedge(const FamilySystem& fs, const std::map<VariableId, SeriesSpec>& series,
                            std::uint64_t depth);

// First level v whose coefficient survives setting the declared-zero variables
// to 0, together with that reduced coefficient.
ThetaExtraction extract_g_theta(const WedgeExpansion& we, std::uint64_t u,
                                const std::vector<VariableId>& declared_zero);

// The coefficient one level above theta_u, reduced the same way; it may be zero.
ThetaExtraction extract_next(const WedgeExpansion& we, std::uint64_t u,
                             const std::vector<VariableId>& declared_zero);

}  // namespace jetspace
