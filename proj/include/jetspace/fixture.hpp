#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jetspace/valuative.hpp"
#include "jetspace/wedge.hpp"

namespace jetspace {

// One divisor entry: the contact record, the split branch of its leading form
// when there is one (column name plus the matching family-coordinate factor),
// and an optional point satisfying its reduced family equations.
struct DivisorFixture {
    DivisorRecord record;
    std::optional<std::string> branch_column;
    std::optional<Polynomial> branch_factor;
    std::map<VariableId, GaussianRational> witness;
};

// One scripted residual pair.  The target branch and source factor are taken
// from the respective divisor entries when the flags are set.
struct CaseFixture {
    std::string source;
    std::string target;
    std::uint64_t k = 0;
    bool use_target_branch = false;
    bool use_source_factor = false;
    std::uint64_t audit_budget = 200000;
    std::vector<std::vector<WeightConstraint>> audit_contexts;  // empty: one blank context
    CaseScript script;
};

struct SurfaceFixture {
    std::string name;
    SurfaceEquation surface;
    std::vector<std::string> columns;  // test functions, readable as x,y,z polynomials
    std::vector<DivisorFixture> divisors;
    std::vector<std::pair<std::string, std::string>> symmetries;
    IntersectionMatrix matrix;
    std::vector<CaseFixture> cases;

    const DivisorFixture& divisor(const std::string& divisor_name) const;
    const CaseFixture* find_case(const std::string& source, const std::string& target) const;
    OrderTable order_table() const;
};

// Throws fixture_error on malformed documents; messages carry the offending key.
SurfaceFixture parse_fixture(const nlohmann::json& doc);
SurfaceFixture load_fixture(const std::string& path);

// Single variable spelled the way the polynomial parser reads it, e.g. "c3_1".
VariableId parse_variable(const std::string& text);

// Reduced family equations of the named divisor, cut down to the declared
// branch factor when the divisor has one and use_branch is set.
std::vector<Polynomial> family_relations(const SurfaceFixture& fx, const std::string& divisor_name,
                                         std::uint64_t k, bool use_branch);

WedgeProblem make_case_problem(const SurfaceFixture& fx, const CaseFixture& cf);

// Self-contained certificate for one scripted case run: every closed branch
// embeds enough data to recompute its closure.
nlohmann::json wedge_certificate(const SurfaceFixture& fx, const CaseFixture& cf,
                                 const CaseReport& report);

struct CertificateCheck {
    bool valid = false;      // well-formed and every stored refutation recomputes
    bool certified = false;  // the stored run closed every branch as expected
    std::string note;
};

// Accepts a single case certificate or a run report wrapping several.
CertificateCheck check_certificate(const nlohmann::json& doc);

}  // namespace jetspace
