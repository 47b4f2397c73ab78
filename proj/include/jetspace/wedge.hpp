#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetspace/groebner.hpp"
#include "jetspace/jets.hpp"
#include "jetspace/weights.hpp"

namespace jetspace {

// One equation that must vanish identically in s: a family equation of the
// target, or a low t-coefficient of the target's branch function.
struct ExpansionRow {
    std::uint64_t u = 0;
    Polynomial f;
    bool from_factor = false;
};

// Branch function cutting out a split target, e.g. z - i*x^2; the name must
// appear among the target's test orders.
struct TargetBranch {
    std::string function_name;
    Polynomial function;
};

// Dominant-weight analysis of a wedge whose generic arc has the target's
// contact and whose special arc has the source's.  Coordinates between the
// two contact orders get one positive weight symbol each (their exact s-order);
// coordinates at the source contact are nonzero constants.
struct WedgeProblem {
    SurfaceEquation surface;
    DivisorRecord source;
    DivisorRecord target;
    std::uint64_t k = 0;
    FamilySystem family;  // target family at truncation k
    std::vector<ExpansionRow> rows;

    std::vector<VariableId> symbol_vars;    // weighted coordinates, ascending id
    std::vector<std::string> symbol_names;  // alpha/beta/gamma + coefficient index
    std::map<VariableId, std::size_t> symbol_of;
    std::vector<VariableId> unit_series;        // weighted vars leading the target contact
    std::vector<VariableId> nonzero_constants;  // source-leading plain coefficients
    std::vector<Polynomial> source_relations;
    std::vector<VariableId> normalized;  // series pinned to exactly s^w
    WeightConstraintSystem assumed = WeightConstraintSystem(0);  // positivity of every symbol

    std::size_t symbol_index(VariableId v) const;
    std::optional<std::size_t> symbol_index(const std::string& name) const;
};

// Validates componentwise source contact >= target contact.  Source relations
// come from the declared source factor when present, otherwise from the
// source's reduced family equations at truncation k.
WedgeProblem make_wedge_problem(SurfaceEquation surface, DivisorRecord source,
                                DivisorRecord target, std::uint64_t k,
                                std::optional<TargetBranch> target_branch = std::nullopt,
                                std::optional<Polynomial> source_factor = std::nullopt);

// Symbolic s-order of a monomial: weighted variables contribute their symbol,
// everything else is constant in s and contributes zero.
LinearForm monomial_weight(const WedgeProblem& problem, const Monomial& mono);

// One way for a row's minimal weight to be attainable: the attaining monomials
// plus the ties and dominations that select them.
struct WeightAlternative {
    std::vector<Monomial> attaining;
    std::vector<WeightConstraint> constraints;
};

// Alternatives for one row under the accumulated constraints: each surviving
// weight form as the strict minimum or a tie of two forms, feasibility
// filtered.  A strict minimum carried by a single monomial all of whose
// factors are pinned nonzero is impossible and excluded.
std::vector<WeightAlternative> row_alternatives(const WedgeProblem& problem,
                                                const ExpansionRow& row,
                                                const WeightConstraintSystem& context);
std::vector<WeightAlternative> weight_constraints(const WedgeProblem& problem, std::uint64_t u);

struct DominantConfiguration {
    std::map<std::uint64_t, std::vector<Monomial>> attaining;
    WeightConstraintSystem constraints;
    std::vector<Rational> witness;
};

// Depth-first product of row alternatives with Fourier-Motzkin pruning; the
// budget caps explored alternatives and overruns throw budget_exceeded.
std::vector<DominantConfiguration> enumerate_configurations(
    const WedgeProblem& problem, std::uint64_t budget,
    const std::vector<WeightConstraint>& context = {});

// Leading s-coefficients g_theta of the chosen rows (default: all) at the
// configuration's witness weights, followed by the source relations.
std::vector<Polynomial> leading_system(const WedgeProblem& problem,
                                       const DominantConfiguration& cfg,
                                       const std::vector<std::uint64_t>& rows = {});

// Minimal-weight monomials of every row at concrete weights.
std::map<std::uint64_t, std::vector<Monomial>> attaining_at(const WedgeProblem& problem,
                                                            const std::vector<Rational>& weights);

enum class Verdict { unsat, sat, inconclusive };

struct RefutationCertificate {
    std::vector<Polynomial> system;
    std::vector<Polynomial> nonzero;
    Verdict verdict = Verdict::inconclusive;
    Polynomial saturating_product;
    std::uint64_t exponent_bound = 0;
    std::vector<Polynomial> saturated_basis;
    std::map<VariableId, GaussianRational> witness;
    std::uint64_t grid_checked = 0;
};

// Saturates ideal(system) by the product of the nonzero polynomials: unit
// ideal certifies UNSAT.  Otherwise a capped grid search over small Gaussian
// rationals looks for a witness; the grid never certifies UNSAT.
RefutationCertificate refute(const std::vector<Polynomial>& system,
                             const std::vector<Polynomial>& nonzero,
                             GroebnerBudget budget = GroebnerBudget{},
                             std::uint64_t grid_budget = 200000);

bool verify_witness(const std::vector<Polynomial>& system,
                    const std::vector<Polynomial>& nonzero,
                    const std::map<VariableId, GaussianRational>& assignment);

// Recomputes the certificate's claim from its stored inputs.
bool revalidate(const RefutationCertificate& cert);

// Extra polynomial relations imposed on a system plus factors excluded from
// the vanishing locus, e.g. a3 = 0, c6 = 1, b4^3 + 1 = 0 excluding b4 + 1.
struct Specialization {
    std::vector<Polynomial> relations;
    std::vector<Polynomial> exclusions;
};

RefutationCertificate refute_with_specialization(const std::vector<Polynomial>& system,
                                                 const std::vector<Polynomial>& nonzero,
                                                 const Specialization& special,
                                                 GroebnerBudget budget = GroebnerBudget{},
                                                 std::uint64_t grid_budget = 200000);

enum class BranchExpectation { none, unsat, monomial };

// One branch of a case script: a weight region plus the recipe for closing it.
struct CaseBranch {
    std::string name;
    std::vector<WeightConstraint> constraints;
    std::vector<Rational> forced_weights;   // empty: use the Fourier-Motzkin witness
    std::vector<VariableId> normalized;     // extra normalizations on this branch
    std::vector<VariableId> declared_zero;  // series identically zero on this branch
    std::vector<std::uint64_t> system_rows;  // empty: every row
    std::vector<std::uint64_t> extract_next_rows;
    std::vector<Polynomial> extra_system;
    std::vector<Polynomial> extra_nonzero;
    Specialization specialization;
    std::vector<VariableId> unpinned;  // dropped from the automatic nonzero set
    bool include_source_relations = true;
    bool use_leading_system = true;
    std::uint64_t depth = 0;  // 0: derived from the witness weights
    BranchExpectation expect = BranchExpectation::none;
    std::uint64_t monomial_row = 0;  // checked when expect == monomial
};

struct CaseScript {
    std::string name;
    std::vector<CaseBranch> branches;
};

enum class BranchClosure { pinned_monomial, refuted, open };

struct BranchOutcome {
    std::string name;
    BranchClosure closure = BranchClosure::open;
    std::string note;                    // reason when open
    std::uint64_t contradiction_row = 0;
    Polynomial contradiction_g;
    std::optional<RefutationCertificate> certificate;
    std::vector<std::uint64_t> weights_used;  // scaled, aligned with symbol_vars
    bool expectation_met = true;
};

struct CaseReport {
    std::string name;
    bool certified = false;
    std::vector<BranchOutcome> branches;
};

struct WedgeBudgets {
    GroebnerBudget groebner;
    FeasibilityBudget feasibility;
    std::uint64_t grid = 200000;
    std::uint64_t enumeration = 100000;
};

// Runs every branch: a branch closes through a region-wide pinned monomial
// contradiction or an UNSAT refutation of its leading system.  The attaining
// pattern of every used row must be entailed across the branch region.
// Certified only when all branches close and meet their expectations.
CaseReport run_noninclusion_case(const WedgeProblem& problem, const CaseScript& script,
                                 const WedgeBudgets& budgets = WedgeBudgets{});

// Configurations enumerated under the context whose witness no script branch
// region contains; empty means the script covers the configuration space.
std::vector<DominantConfiguration> audit_coverage(const WedgeProblem& problem,
                                                  const CaseScript& script, std::uint64_t budget,
                                                  const std::vector<WeightConstraint>& context = {});

}  // namespace jetspace
