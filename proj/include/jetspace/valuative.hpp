#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetspace/errors.hpp"
#include "jetspace/jets.hpp"

namespace jetspace {

// Vanishing orders of a fixed list of test functions along each divisor,
// plus the divisor symmetry used to reduce the residual-pair list.  Orders
// are read from each record's test_orders map.
struct OrderTable {
    std::vector<std::string> test_functions;
    std::vector<DivisorRecord> divisors;
    std::vector<std::pair<std::string, std::string>> symmetries;

    std::size_t divisor_index(const std::string& name) const;
    const DivisorRecord& divisor(const std::string& name) const;
    std::uint64_t order_of(const std::string& divisor, const std::string& fn) const;
};

// Validates completeness: every divisor carries an order for every test
// function, names are unique, symmetries name existing divisors and are
// disjoint.
OrderTable make_order_table(std::vector<std::string> test_functions,
                            std::vector<DivisorRecord> divisors,
                            std::vector<std::pair<std::string, std::string>> symmetries);

// First declared test function f with ord_i f < ord_j f, if any.
// Such an f proves the arc family of i is not contained in that of j.
std::optional<std::string> valuative_check(const OrderTable& table, const std::string& i,
                                           const std::string& j);

// Ordered pairs (source, target) with no valuative witness.
struct ResidualPairs {
    std::vector<std::pair<std::string, std::string>> full;
    std::vector<std::pair<std::string, std::string>> reduced;
};

// Both lists sorted by (target index, source index).  The reduced list keeps
// one representative per orbit of the declared symmetry, acting on both
// components at once; the representative minimizes (target index, source index).
ResidualPairs residual_pairs(const OrderTable& table);

// Pairs (lower, upper): lower has order <= upper on every test function and
// < on at least one.  Throws engine_error if antisymmetry fails.
std::vector<std::pair<std::string, std::string>> partial_order(const OrderTable& table);

enum class NonInclusionStatus { proved_valuative, requires_wedge };

// Claim: the arc family of `source` is not contained in that of `target`.
struct NonInclusionTask {
    std::string source;
    std::string target;
    NonInclusionStatus status = NonInclusionStatus::requires_wedge;
    std::string witness;  // test function name when proved_valuative
};

// All ordered pairs, each either proved by a table witness or left for wedges.
std::vector<NonInclusionTask> classify_pairs(const OrderTable& table);

struct IntersectionMatrix {
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t size() const { return entries.size(); }
};

// Throws fixture_error unless the matrix is square and symmetric.
// Negative definiteness via leading principal minors: (-1)^k det_k > 0.
bool is_negative_definite(const IntersectionMatrix& m);

// Componentwise least positive integer vector with M*m <= 0, by the Laufer
// increment loop from all-ones.  Throws error unless M is negative definite.
std::vector<std::int64_t> lipman_vector(const IntersectionMatrix& m);

}  // namespace jetspace
