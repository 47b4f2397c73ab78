#include "jetspace/wedge.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace jetspace {

namespace {

bool contains_var(const std::vector<VariableId>& xs, VariableId v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

bool contains_u64(const std::vector<std::uint64_t>& xs, std::uint64_t u) {
    return std::find(xs.begin(), xs.end(), u) != xs.end();
}

struct FormGroup {
    LinearForm form;
    std::vector<Monomial> monomials;
};

std::vector<FormGroup> group_by_form(const WedgeProblem& p, const Polynomial& f) {
    std::vector<FormGroup> groups;
    for (const Term& t : f.terms()) {
        LinearForm w = monomial_weight(p, t.mono);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const FormGroup& g) { return g.form == w; });
        if (it == groups.end()) {
            groups.push_back(FormGroup{std::move(w), {t.mono}});
        } else {
            it->monomials.push_back(t.mono);
        }
    }
    return groups;
}

// Every factor has a pinned nonzero leading coefficient: weighted coordinates
// by the exact-order semantics, source-leading coordinates by assumption.
bool fully_pinned(const WedgeProblem& p, const Monomial& mono) {
    for (const auto& [v, e] : mono.factors) {
        if (!p.symbol_of.count(v) && !contains_var(p.nonzero_constants, v)) return false;
    }
    return true;
}

WeightConstraintSystem extended(WeightConstraintSystem base,
                                const std::vector<WeightConstraint>& extra) {
    for (const auto& c : extra) base.add(c);
    return base;
}

// Minimal symbolic order of f at integer weights; nullopt for the zero polynomial.
std::optional<std::uint64_t> min_order_at(const WedgeProblem& p, const Polynomial& f,
                                          const std::vector<std::uint64_t>& w) {
    std::optional<std::uint64_t> best;
    for (const Term& t : f.terms()) {
        std::uint64_t val = 0;
        for (const auto& [v, e] : t.mono.factors) {
            auto it = p.symbol_of.find(v);
            if (it != p.symbol_of.end()) val += static_cast<std::uint64_t>(e) * w[it->second];
        }
        if (!best || val < *best) best = val;
    }
    return best;
}

std::vector<std::uint64_t> scale_weights(const std::vector<Rational>& witness) {
    mpz_class l(1);
    for (const Rational& q : witness) {
        mpz_class den = q.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<std::uint64_t> out;
    out.reserve(witness.size());
    for (const Rational& q : witness) {
        Rational scaled = q * Rational(l);
        mpz_class num = scaled.get_num();
        if (num <= 0 || scaled.get_den() != 1 || !num.fits_ulong_p()) {
            throw engine_error("weight witness does not scale to positive integers");
        }
        out.push_back(num.get_ui());
    }
    return out;
}

std::map<VariableId, SeriesSpec> build_series(const WedgeProblem& p,
                                              const std::vector<std::uint64_t>& w,
                                              const std::vector<VariableId>& extra_normalized,
                                              const std::vector<VariableId>& declared_zero) {
    std::map<VariableId, SeriesSpec> series;
    for (std::size_t j = 0; j < p.symbol_vars.size(); ++j) {
        VariableId v = p.symbol_vars[j];
        if (contains_var(declared_zero, v)) continue;
        const bool norm = contains_var(p.normalized, v) || contains_var(extra_normalized, v);
        series.emplace(v, SeriesSpec{w[j], norm});
    }
    return series;
}

WedgeExpansion expand_rows(const WedgeProblem& p, const std::vector<ExpansionRow>& rows,
                           const std::map<VariableId, SeriesSpec>& series, std::uint64_t depth) {
    WedgeExpansion we;
    we.k = p.k;
    we.depth = depth;
    for (const ExpansionRow& r : rows) we.coefficients.emplace(r.u, expand_in_s(r.f, series, depth));
    return we;
}

VariableId leading_coefficient_var(VariableId series_var, const SeriesSpec& spec) {
    return wedge_variable(series_var.family(), series_var.primary(),
                          static_cast<std::uint32_t>(spec.start));
}

// Attaining groups of f at the witness, as indices into the grouping.
struct RowPattern {
    std::vector<FormGroup> groups;
    std::vector<std::size_t> attaining;
};

RowPattern pattern_at(const WedgeProblem& p, const Polynomial& f,
                      const std::vector<Rational>& witness) {
    RowPattern pat;
    pat.groups = group_by_form(p, f);
    std::optional<Rational> best;
    for (std::size_t q = 0; q < pat.groups.size(); ++q) {
        Rational val = pat.groups[q].form.evaluate(witness);
        if (!best || val < *best) {
            best = val;
            pat.attaining.assign(1, q);
        } else if (val == *best) {
            pat.attaining.push_back(q);
        }
    }
    return pat;
}

// The witness pattern holds across the whole region: attaining forms tie and
// every other form stays strictly above.
bool pattern_entailed(const WeightConstraintSystem& region, const RowPattern& pat,
                      const FeasibilityBudget& budget) {
    const LinearForm& lead = pat.groups[pat.attaining.front()].form;
    for (std::size_t q : pat.attaining) {
        if (!entails(region, constrain_eq(pat.groups[q].form - lead), budget)) return false;
    }
    for (std::size_t q = 0; q < pat.groups.size(); ++q) {
        if (std::find(pat.attaining.begin(), pat.attaining.end(), q) != pat.attaining.end()) continue;
        if (!entails(region, constrain_gt(pat.groups[q].form - lead), budget)) return false;
    }
    return true;
}

}  // namespace

std::size_t WedgeProblem::symbol_index(VariableId v) const {
    auto it = symbol_of.find(v);
    if (it == symbol_of.end()) throw engine_error("variable carries no weight symbol");
    return it->second;
}

std::optional<std::size_t> WedgeProblem::symbol_index(const std::string& name) const {
    for (std::size_t j = 0; j < symbol_names.size(); ++j) {
        if (symbol_names[j] == name) return j;
    }
    return std::nullopt;
}

WedgeProblem make_wedge_problem(SurfaceEquation surface, DivisorRecord source,
                                DivisorRecord target, std::uint64_t k,
                                std::optional<TargetBranch> target_branch,
                                std::optional<Polynomial> source_factor) {
    for (int c = 0; c < 3; ++c) {
        if (source.mu[c] < target.mu[c]) {
            throw error("source contact must dominate target contact componentwise");
        }
    }
    JetSystem js = expand_jet(surface, k);
    FamilySystem family = reduce_to_family(js, target);
    WedgeProblem p{std::move(surface), std::move(source), std::move(target), k, std::move(family)};

    if (target_branch) {
        auto it = p.target.test_orders.find(target_branch->function_name);
        if (it == p.target.test_orders.end()) {
            throw fixture_error("target has no test order for " + target_branch->function_name);
        }
        std::map<VariableId, Polynomial> kill;
        for (VariableId v : p.family.vanishing) kill.emplace(v, Polynomial::zero());
        std::vector<Polynomial> coeffs = expand_function(target_branch->function, k);
        for (std::uint64_t l = p.target.mu_z(); l < it->second && l <= k; ++l) {
            Polynomial f = coeffs[l].substitute(kill);
            if (f.is_zero()) continue;
            p.rows.push_back(ExpansionRow{l, std::move(f), true});
        }
    }
    for (const FamilyEquation& fe : p.family.reduced) {
        if (fe.f.is_zero()) continue;
        p.rows.push_back(ExpansionRow{fe.u, fe.f, false});
    }
    std::sort(p.rows.begin(), p.rows.end(),
              [](const ExpansionRow& a, const ExpansionRow& b) { return a.u < b.u; });
    for (std::size_t q = 1; q < p.rows.size(); ++q) {
        if (p.rows[q - 1].u == p.rows[q].u) throw engine_error("duplicate expansion row level");
    }

    const Family fams[3] = {Family::a, Family::b, Family::c};
    const char* prefixes[3] = {"alpha", "beta", "gamma"};
    for (int c = 0; c < 3; ++c) {
        for (std::uint64_t n = p.target.mu[c]; n < p.source.mu[c]; ++n) {
            VariableId v = jet_variable(fams[c], static_cast<std::uint32_t>(n));
            p.symbol_of.emplace(v, p.symbol_vars.size());
            p.symbol_vars.push_back(v);
            p.symbol_names.push_back(prefixes[c] + std::to_string(n));
            if (n == p.target.mu[c]) p.unit_series.push_back(v);
        }
        p.nonzero_constants.push_back(
            jet_variable(fams[c], static_cast<std::uint32_t>(p.source.mu[c])));
    }

    if (source_factor) {
        p.source_relations.push_back(std::move(*source_factor));
    } else {
        FamilySystem src = reduce_to_family(js, p.source);
        for (const FamilyEquation& fe : src.reduced) {
            if (!fe.f.is_zero()) p.source_relations.push_back(fe.f);
        }
    }

    p.assumed = WeightConstraintSystem(p.symbol_vars.size());
    for (std::size_t j = 0; j < p.symbol_vars.size(); ++j) {
        LinearForm e(p.symbol_vars.size());
        e.coeffs[j] = 1;
        p.assumed.add(constrain_gt(std::move(e)));
    }
    return p;
}

LinearForm monomial_weight(const WedgeProblem& problem, const Monomial& mono) {
    LinearForm w(problem.symbol_vars.size());
    for (const auto& [v, e] : mono.factors) {
        auto it = problem.symbol_of.find(v);
        if (it != problem.symbol_of.end()) w.coeffs[it->second] += Rational(static_cast<long>(e));
    }
    return w;
}

std::vector<WeightAlternative> row_alternatives(const WedgeProblem& problem,
                                                const ExpansionRow& row,
                                                const WeightConstraintSystem& context) {
    std::vector<FormGroup> groups = group_by_form(problem, row.f);
    if (groups.empty()) return {WeightAlternative{}};

    std::vector<std::size_t> live;
    for (std::size_t q = 0; q < groups.size(); ++q) {
        bool dominated = false;
        for (std::size_t m = 0; m < groups.size() && !dominated; ++m) {
            if (m == q) continue;
            dominated = entails(context, constrain_gt(groups[q].form - groups[m].form));
        }
        if (!dominated) live.push_back(q);
    }

    std::vector<WeightAlternative> alts;
    for (std::size_t q : live) {
        const FormGroup& g = groups[q];
        if (g.monomials.size() == 1 && fully_pinned(problem, g.monomials.front())) continue;
        WeightAlternative alt;
        alt.attaining = g.monomials;
        WeightConstraintSystem sys = context;
        for (std::size_t l : live) {
            if (l == q) continue;
            WeightConstraint c = constrain_gt(groups[l].form - g.form);
            sys.add(c);
            alt.constraints.push_back(std::move(c));
        }
        if (!feasible_point(sys)) continue;
        alts.push_back(std::move(alt));
    }
    for (std::size_t a = 0; a < live.size(); ++a) {
        for (std::size_t b = a + 1; b < live.size(); ++b) {
            const FormGroup& ga = groups[live[a]];
            const FormGroup& gb = groups[live[b]];
            WeightAlternative alt;
            alt.attaining = ga.monomials;
            alt.attaining.insert(alt.attaining.end(), gb.monomials.begin(), gb.monomials.end());
            WeightConstraintSystem sys = context;
            WeightConstraint tie = constrain_eq(ga.form - gb.form);
            sys.add(tie);
            alt.constraints.push_back(std::move(tie));
            for (std::size_t l : live) {
                if (l == live[a] || l == live[b]) continue;
                WeightConstraint c = constrain_ge(groups[l].form - ga.form);
                sys.add(c);
                alt.constraints.push_back(std::move(c));
            }
            if (!feasible_point(sys)) continue;
            alts.push_back(std::move(alt));
        }
    }
    return alts;
}

std::vector<WeightAlternative> weight_constraints(const WedgeProblem& problem, std::uint64_t u) {
    for (const ExpansionRow& r : problem.rows) {
        if (r.u == u) return row_alternatives(problem, r, problem.assumed);
    }
    throw fixture_error("no expansion row at level " + std::to_string(u));
}

std::vector<DominantConfiguration> enumerate_configurations(
    const WedgeProblem& problem, std::uint64_t budget,
    const std::vector<WeightConstraint>& context) {
    struct Dfs {
        const WedgeProblem& p;
        std::uint64_t budget;
        std::uint64_t explored = 0;
        std::vector<DominantConfiguration> out;

        void run(std::size_t idx, const WeightConstraintSystem& sys,
                 std::map<std::uint64_t, std::vector<Monomial>>& attaining) {
            if (idx == p.rows.size()) {
                auto witness = feasible_point(sys);
                if (!witness) throw engine_error("enumerated configuration lost feasibility");
                out.push_back(DominantConfiguration{attaining, sys, std::move(*witness)});
                return;
            }
            const ExpansionRow& row = p.rows[idx];
            for (WeightAlternative& alt : row_alternatives(p, row, sys)) {
                if (++explored > budget) {
                    throw budget_exceeded("configuration enumeration", explored);
                }
                WeightConstraintSystem next = extended(sys, alt.constraints);
                attaining[row.u] = alt.attaining;
                run(idx + 1, next, attaining);
                attaining.erase(row.u);
            }
        }
    };
    Dfs dfs{problem, budget};
    WeightConstraintSystem base = extended(problem.assumed, context);
    std::map<std::uint64_t, std::vector<Monomial>> attaining;
    dfs.run(0, base, attaining);
    return dfs.out;
}

std::vector<Polynomial> leading_system(const WedgeProblem& problem,
                                       const DominantConfiguration& cfg,
                                       const std::vector<std::uint64_t>& rows) {
    if (cfg.witness.size() != problem.symbol_vars.size()) {
        throw engine_error("configuration witness width mismatch");
    }
    const std::vector<std::uint64_t> w =
        problem.symbol_vars.empty() ? std::vector<std::uint64_t>{} : scale_weights(cfg.witness);
    const auto series = build_series(problem, w, {}, {});
    std::uint64_t depth = 0;
    for (const ExpansionRow& r : problem.rows) {
        auto th = min_order_at(problem, r.f, w);
        if (th && *th > depth) depth = *th;
    }
    depth += 2;
    WedgeExpansion we = expand_rows(problem, problem.rows, series, depth);
    std::vector<Polynomial> out;
    for (const ExpansionRow& r : problem.rows) {
        if (!rows.empty() && !contains_u64(rows, r.u)) continue;
        out.push_back(extract_g_theta(we, r.u, {}).g);
    }
    for (const Polynomial& rel : problem.source_relations) out.push_back(rel);
    return out;
}

std::map<std::uint64_t, std::vector<Monomial>> attaining_at(const WedgeProblem& problem,
                                                            const std::vector<Rational>& weights) {
    if (weights.size() != problem.symbol_vars.size()) {
        throw engine_error("weight vector width mismatch");
    }
    std::map<std::uint64_t, std::vector<Monomial>> out;
    for (const ExpansionRow& r : problem.rows) {
        RowPattern pat = pattern_at(problem, r.f, weights);
        std::vector<Monomial> mins;
        for (std::size_t q : pat.attaining) {
            mins.insert(mins.end(), pat.groups[q].monomials.begin(), pat.groups[q].monomials.end());
        }
        out.emplace(r.u, std::move(mins));
    }
    return out;
}

namespace {

const std::vector<GaussianRational>& grid_values() {
    static const std::vector<GaussianRational> values = [] {
        const GaussianRational i = GaussianRational::imaginary_unit();
        std::vector<GaussianRational> v;
        v.push_back(GaussianRational(0));
        v.push_back(GaussianRational(1));
        v.push_back(GaussianRational(-1));
        v.push_back(i);
        v.push_back(GaussianRational(0) - i);
        v.push_back(GaussianRational(2));
        v.push_back(GaussianRational(-2));
        v.push_back(i * GaussianRational(2));
        v.push_back(i * GaussianRational(-2));
        v.push_back(GaussianRational(1) + i);
        v.push_back(GaussianRational(1) - i);
        v.push_back(GaussianRational(-1) + i);
        v.push_back(GaussianRational(-1) - i);
        const Rational fractions[] = {Rational(1, 2), Rational(-1, 2), Rational(3),
                                      Rational(-3),   Rational(1, 3),  Rational(-1, 3),
                                      Rational(3, 2), Rational(-3, 2), Rational(2, 3),
                                      Rational(-2, 3)};
        for (const Rational& r : fractions) v.push_back(GaussianRational(r));
        v.push_back(i * GaussianRational(Rational(1, 2)));
        v.push_back(i * GaussianRational(Rational(-1, 2)));
        return v;
    }();
    return values;
}

}  // namespace

bool verify_witness(const std::vector<Polynomial>& system,
                    const std::vector<Polynomial>& nonzero,
                    const std::map<VariableId, GaussianRational>& assignment) {
    for (const Polynomial& f : system) {
        if (!f.evaluate(assignment).is_zero()) return false;
    }
    for (const Polynomial& d : nonzero) {
        if (d.evaluate(assignment).is_zero()) return false;
    }
    return true;
}

RefutationCertificate refute(const std::vector<Polynomial>& system,
                             const std::vector<Polynomial>& nonzero, GroebnerBudget budget,
                             std::uint64_t grid_budget) {
    RefutationCertificate cert;
    cert.system = system;
    cert.nonzero = nonzero;
    Polynomial product = Polynomial::constant(GaussianRational(1));
    for (const Polynomial& d : nonzero) {
        if (d.is_zero()) throw zero_polynomial_error("nonzero constraint");
        product *= d;
    }
    cert.saturating_product = product;

    IdealHandle ideal = buchberger(system, MonomialOrder::grevlex(), budget);
    SaturationResult sat = saturate(ideal, product);
    if (is_unit_ideal(sat.ideal)) {
        cert.verdict = Verdict::unsat;
        cert.exponent_bound = sat.exponent_bound;
        cert.saturated_basis = sat.ideal.basis();
        return cert;
    }

    std::set<VariableId> varset;
    for (const Polynomial& f : system) {
        for (VariableId v : f.variables()) varset.insert(v);
    }
    for (const Polynomial& d : nonzero) {
        for (VariableId v : d.variables()) varset.insert(v);
    }
    const std::vector<VariableId> vars(varset.begin(), varset.end());
    const auto& values = grid_values();
    std::vector<std::size_t> digits(vars.size(), 0);
    std::uint64_t checked = 0;
    while (checked < grid_budget) {
        std::map<VariableId, GaussianRational> assignment;
        for (std::size_t q = 0; q < vars.size(); ++q) assignment.emplace(vars[q], values[digits[q]]);
        ++checked;
        if (verify_witness(system, nonzero, assignment)) {
            cert.verdict = Verdict::sat;
            cert.witness = std::move(assignment);
            cert.grid_checked = checked;
            return cert;
        }
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < values.size()) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
    }
    cert.grid_checked = checked;
    return cert;
}

bool revalidate(const RefutationCertificate& cert) {
    Polynomial product = Polynomial::constant(GaussianRational(1));
    for (const Polynomial& d : cert.nonzero) product *= d;
    if (product != cert.saturating_product) return false;
    switch (cert.verdict) {
        case Verdict::unsat: {
            IdealHandle ideal = buchberger(cert.system);
            SaturationResult sat = saturate(ideal, product);
            return is_unit_ideal(sat.ideal) && sat.ideal.basis() == cert.saturated_basis;
        }
        case Verdict::sat:
            return verify_witness(cert.system, cert.nonzero, cert.witness);
        case Verdict::inconclusive:
            return false;
    }
    return false;
}

RefutationCertificate refute_with_specialization(const std::vector<Polynomial>& system,
                                                 const std::vector<Polynomial>& nonzero,
                                                 const Specialization& special,
                                                 GroebnerBudget budget,
                                                 std::uint64_t grid_budget) {
    std::vector<Polynomial> augmented = system;
    augmented.insert(augmented.end(), special.relations.begin(), special.relations.end());
    std::vector<Polynomial> excluded = nonzero;
    excluded.insert(excluded.end(), special.exclusions.begin(), special.exclusions.end());
    return refute(augmented, excluded, budget, grid_budget);
}

namespace {

BranchOutcome run_branch(const WedgeProblem& p, const CaseBranch& branch,
                         const WedgeBudgets& budgets) {
    BranchOutcome out;
    out.name = branch.name;

    WeightConstraintSystem region = extended(p.assumed, branch.constraints);
    std::vector<Rational> witness;
    if (!branch.forced_weights.empty()) {
        if (branch.forced_weights.size() != p.symbol_vars.size()) {
            out.note = "forced weights width mismatch";
            return out;
        }
        if (!region.satisfied_by(branch.forced_weights)) {
            out.note = "forced weights violate the branch region";
            return out;
        }
        witness = branch.forced_weights;
    } else {
        auto w = feasible_point(region, budgets.feasibility);
        if (!w) {
            out.note = "branch region infeasible";
            return out;
        }
        witness = *w;
    }
    const std::vector<std::uint64_t> scaled =
        p.symbol_vars.empty() ? std::vector<std::uint64_t>{} : scale_weights(witness);
    out.weights_used = scaled;
    std::vector<Rational> scaled_witness;
    scaled_witness.reserve(scaled.size());
    for (std::uint64_t w : scaled) scaled_witness.push_back(Rational(static_cast<unsigned long>(w)));

    for (VariableId v : branch.declared_zero) {
        if (!p.symbol_of.count(v)) {
            throw fixture_error("declared zero variable carries no weight symbol");
        }
        if (contains_var(p.unit_series, v)) {
            throw fixture_error("cannot declare a unit series coordinate zero");
        }
    }
    for (VariableId v : branch.unpinned) {
        if (!contains_var(p.nonzero_constants, v)) {
            throw fixture_error("unpinned variable is not an automatic nonzero");
        }
    }

    std::vector<Polynomial> system;
    std::vector<Polynomial> nonzero;
    bool closed = false;

    if (branch.use_leading_system) {
        std::map<VariableId, Polynomial> kill;
        for (VariableId v : branch.declared_zero) kill.emplace(v, Polynomial::zero());
        std::vector<ExpansionRow> rows;
        for (const ExpansionRow& r : p.rows) {
            Polynomial f = kill.empty() ? r.f : r.f.substitute(kill);
            if (f.is_zero()) continue;
            rows.push_back(ExpansionRow{r.u, std::move(f), r.from_factor});
        }
        const auto series = build_series(p, scaled, branch.normalized, branch.declared_zero);
        std::uint64_t depth = branch.depth;
        if (depth == 0) {
            for (const ExpansionRow& r : rows) {
                auto th = min_order_at(p, r.f, scaled);
                if (th && *th > depth) depth = *th;
            }
            depth += 2;
        }
        const WedgeExpansion we = expand_rows(p, rows, series, depth);

        auto expanded_pinned = [&](const Monomial& mono) {
            for (const auto& [v, e] : mono.factors) {
                if (v.is_wedge()) {
                    VariableId base = jet_variable(v.family(), v.primary());
                    auto it = series.find(base);
                    if (it == series.end() || it->second.normalized) return false;
                    if (v != leading_coefficient_var(base, it->second)) return false;
                } else if (v.is_aux()) {
                    return false;
                } else {
                    if (contains_var(branch.unpinned, v)) return false;
                    if (!contains_var(p.nonzero_constants, v)) return false;
                }
            }
            return true;
        };

        std::vector<RowPattern> patterns;
        patterns.reserve(rows.size());
        for (const ExpansionRow& r : rows) patterns.push_back(pattern_at(p, r.f, scaled_witness));

        for (std::size_t q = 0; q < rows.size() && !closed; ++q) {
            ThetaExtraction ex = extract_g_theta(we, rows[q].u, {});
            auto predicted = min_order_at(p, rows[q].f, scaled);
            if (!predicted || ex.theta != *predicted) {
                throw engine_error("unexpected leading-order cancellation in row " +
                                   std::to_string(rows[q].u));
            }
            if (ex.g.terms().size() != 1) continue;
            if (!expanded_pinned(ex.g.terms().front().mono)) continue;
            if (!pattern_entailed(region, patterns[q], budgets.feasibility)) continue;
            out.closure = BranchClosure::pinned_monomial;
            out.contradiction_row = rows[q].u;
            out.contradiction_g = ex.g;
            closed = true;
        }

        if (!closed) {
            for (std::size_t q = 0; q < rows.size(); ++q) {
                if (!branch.system_rows.empty() && !contains_u64(branch.system_rows, rows[q].u)) {
                    continue;
                }
                if (!pattern_entailed(region, patterns[q], budgets.feasibility)) {
                    out.note = "attaining pattern of row " + std::to_string(rows[q].u) +
                               " varies across the branch region";
                    return out;
                }
                system.push_back(extract_g_theta(we, rows[q].u, {}).g);
            }
            for (std::uint64_t u : branch.extract_next_rows) {
                for (std::size_t q = 0; q < rows.size(); ++q) {
                    if (rows[q].u != u) continue;
                    if (!pattern_entailed(region, patterns[q], budgets.feasibility)) {
                        out.note = "attaining pattern of row " + std::to_string(u) +
                                   " varies across the branch region";
                        return out;
                    }
                    Polynomial g = extract_next(we, u, {}).g;
                    if (!g.is_zero()) system.push_back(std::move(g));
                }
            }
            for (const auto& [v, spec] : series) {
                if (spec.normalized) continue;
                nonzero.push_back(Polynomial::variable(leading_coefficient_var(v, spec)));
            }
            for (VariableId v : p.nonzero_constants) {
                if (contains_var(branch.unpinned, v)) continue;
                nonzero.push_back(Polynomial::variable(v));
            }
        }
    }

    if (!closed) {
        if (branch.include_source_relations) {
            for (const Polynomial& rel : p.source_relations) system.push_back(rel);
        }
        system.insert(system.end(), branch.extra_system.begin(), branch.extra_system.end());
        system.insert(system.end(), branch.specialization.relations.begin(),
                      branch.specialization.relations.end());
        nonzero.insert(nonzero.end(), branch.extra_nonzero.begin(), branch.extra_nonzero.end());
        nonzero.insert(nonzero.end(), branch.specialization.exclusions.begin(),
                       branch.specialization.exclusions.end());
        RefutationCertificate cert = refute(system, nonzero, budgets.groebner, budgets.grid);
        if (cert.verdict == Verdict::unsat) {
            out.closure = BranchClosure::refuted;
        } else {
            out.note = cert.verdict == Verdict::sat ? "refutation found a satisfying witness"
                                                    : "refutation inconclusive";
        }
        out.certificate = std::move(cert);
    }

    switch (branch.expect) {
        case BranchExpectation::none:
            break;
        case BranchExpectation::unsat:
            out.expectation_met = out.closure == BranchClosure::refuted;
            break;
        case BranchExpectation::monomial:
            out.expectation_met =
                out.closure == BranchClosure::pinned_monomial &&
                (branch.monomial_row == 0 || out.contradiction_row == branch.monomial_row);
            break;
    }
    return out;
}

}  // namespace

CaseReport run_noninclusion_case(const WedgeProblem& problem, const CaseScript& script,
                                 const WedgeBudgets& budgets) {
    CaseReport report;
    report.name = script.name;
    bool all = !script.branches.empty();
    for (const CaseBranch& branch : script.branches) {
        BranchOutcome out;
        try {
            out = run_branch(problem, branch, budgets);
        } catch (const budget_exceeded& e) {
            out.name = branch.name;
            out.closure = BranchClosure::open;
            out.note = e.what();
        }
        all = all && out.closure != BranchClosure::open && out.expectation_met;
        report.branches.push_back(std::move(out));
    }
    report.certified = all;
    return report;
}

std::vector<DominantConfiguration> audit_coverage(const WedgeProblem& problem,
                                                  const CaseScript& script, std::uint64_t budget,
                                                  const std::vector<WeightConstraint>& context) {
    std::vector<DominantConfiguration> uncovered;
    for (DominantConfiguration& cfg : enumerate_configurations(problem, budget, context)) {
        bool covered = false;
        for (const CaseBranch& branch : script.branches) {
            WeightConstraintSystem region = extended(problem.assumed, branch.constraints);
            if (region.satisfied_by(cfg.witness)) {
                covered = true;
                break;
            }
        }
        if (!covered) uncovered.push_back(std::move(cfg));
    }
    return uncovered;
}

}  // namespace jetspace
