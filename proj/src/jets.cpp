#include "jetspace/jets.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

bool is_coordinate(VariableId v) { return v == var_x() || v == var_y() || v == var_z(); }

Polynomial jet_series(Family fam, std::uint64_t k) {
    Polynomial series;
    for (std::uint64_t j = 1; j <= k; ++j) {
        Monomial m = Monomial::from_powers({{jet_variable(fam, static_cast<std::uint32_t>(j)), 1},
                                            {var_t(), static_cast<std::uint32_t>(j)}});
        series += Polynomial::from_monomial(std::move(m));
    }
    return series;
}

}  // namespace

SurfaceEquation::SurfaceEquation(Polynomial poly) : f(std::move(poly)) {
    if (f.is_zero()) throw fixture_error("surface equation is zero");
    for (const Term& t : f.terms()) {
        if (t.mono.total_degree() < 2) {
            throw fixture_error("surface equation has a constant or linear part");
        }
        for (const auto& [v, e] : t.mono.factors) {
            if (!is_coordinate(v)) {
                throw fixture_error("surface equation uses a variable besides x, y, z");
            }
        }
    }
}

const Polynomial& JetSystem::at(std::uint64_t level) const {
    if (level < 1 || level > k) {
        throw error("jet level " + std::to_string(level) + " outside 1.." + std::to_string(k));
    }
    return equations[level - 1];
}

const Polynomial& FamilySystem::at(std::uint64_t u) const {
    for (const FamilyEquation& fe : reduced) {
        if (fe.u == u) return fe.f;
    }
    throw error("no family equation at level " + std::to_string(u) + " for " + divisor.name);
}

const Polynomial& WedgeExpansion::at(std::uint64_t u, std::uint64_t v) const {
    auto it = coefficients.find(u);
    if (it == coefficients.end()) throw error("no wedge coefficients at level " + std::to_string(u));
    if (v > depth) throw error("wedge coefficient index exceeds expansion depth");
    return it->second[v];
}

JetSystem expand_jet(const SurfaceEquation& eq, std::uint64_t k) {
    if (k < 1) throw error("jet truncation order must be positive");
    std::map<VariableId, Polynomial> coords{{var_x(), jet_series(Family::a, k)},
                                            {var_y(), jet_series(Family::b, k)},
                                            {var_z(), jet_series(Family::c, k)}};
    Polynomial expanded = eq.f.substitute(coords);

    std::vector<std::vector<Term>> buckets(k);
    for (const Term& t : expanded.terms()) {
        std::uint32_t dt = t.mono.degree_of(var_t());
        if (dt == 0) throw engine_error("jet expansion produced a t-free term");
        if (dt > k) continue;
        auto stripped = t.mono.divided_by(Monomial::variable(var_t(), dt));
        if (!stripped) throw engine_error("jet expansion failed to strip the t power");
        buckets[dt - 1].push_back(Term{std::move(*stripped), t.coeff});
    }

    JetSystem js;
    js.surface = eq.f;
    js.k = k;
    js.equations.reserve(k);
    for (auto& bucket : buckets) js.equations.push_back(Polynomial::from_terms(std::move(bucket)));
    return js;
}

std::vector<Polynomial> expand_function(const Polynomial& fn, std::uint64_t k) {
    if (k < 1) throw error("jet truncation order must be positive");
    for (VariableId v : fn.variables()) {
        if (!is_coordinate(v)) throw error("function expansion uses a variable besides x, y, z");
    }
    std::map<VariableId, Polynomial> coords{{var_x(), jet_series(Family::a, k)},
                                            {var_y(), jet_series(Family::b, k)},
                                            {var_z(), jet_series(Family::c, k)}};
    Polynomial expanded = fn.substitute(coords);

    std::vector<std::vector<Term>> buckets(k + 1);
    for (const Term& t : expanded.terms()) {
        std::uint32_t dt = t.mono.degree_of(var_t());
        if (dt > k) continue;
        Monomial stripped = t.mono;
        if (dt > 0) {
            auto q = t.mono.divided_by(Monomial::variable(var_t(), dt));
            if (!q) throw engine_error("function expansion failed to strip the t power");
            stripped = std::move(*q);
        }
        buckets[dt].push_back(Term{std::move(stripped), t.coeff});
    }

    std::vector<Polynomial> out;
    out.reserve(k + 1);
    for (auto& bucket : buckets) out.push_back(Polynomial::from_terms(std::move(bucket)));
    return out;
}

std::pair<std::uint64_t, std::uint64_t> contact_orders(const SurfaceEquation& eq,
                                                       const DivisorRecord& d, std::uint64_t k) {
    const std::int64_t mx = static_cast<std::int64_t>(d.mu_x());
    const std::int64_t my = static_cast<std::int64_t>(d.mu_y());
    const std::int64_t mz = static_cast<std::int64_t>(d.mu_z());

    std::int64_t o = std::numeric_limits<std::int64_t>::max();
    std::int64_t o_k = std::numeric_limits<std::int64_t>::max();
    for (const Term& t : eq.f.terms()) {
        const std::int64_t alpha = t.mono.degree_of(var_x());
        const std::int64_t beta = t.mono.degree_of(var_y());
        const std::int64_t gamma = t.mono.degree_of(var_z());
        const std::int64_t w = alpha * mx + beta * my + gamma * mz;
        o = std::min(o, w);
        const std::int64_t shifted[] = {w - mx, w - my, w - mz};
        for (std::int64_t s : shifted) o_k = std::min(o_k, s + static_cast<std::int64_t>(k));
    }
    if (o < 0 || o_k < 0) throw error("contact order came out negative");
    return {static_cast<std::uint64_t>(o), static_cast<std::uint64_t>(o_k)};
}

FamilySystem reduce_to_family(const JetSystem& js, const DivisorRecord& d) {
    auto [o, o_k] = contact_orders(SurfaceEquation(js.surface), d, js.k);
    if (js.k < o) {
        throw error("k too small for family " + d.name + ": k=" + std::to_string(js.k) +
                    " < o=" + std::to_string(o));
    }

    FamilySystem fs;
    fs.divisor = d;
    fs.k = js.k;
    fs.o = o;
    fs.o_k = o_k;
    const Family fams[] = {Family::a, Family::b, Family::c};
    for (int idx = 0; idx < 3; ++idx) {
        for (std::uint64_t j = 1; j < d.mu[idx]; ++j) {
            fs.vanishing.push_back(jet_variable(fams[idx], static_cast<std::uint32_t>(j)));
        }
    }

    std::map<VariableId, Polynomial> kill;
    for (VariableId v : fs.vanishing) kill.emplace(v, Polynomial::zero());

    const std::uint64_t last = std::min(o_k, js.k);
    for (std::uint64_t l = 1; l <= js.k; ++l) {
        Polynomial reduced = js.at(l).substitute(kill);
        if (l < o) {
            if (!reduced.is_zero()) throw engine_error("family reduction is nonzero below the order");
            continue;
        }
        if (l == o && reduced.is_zero()) {
            throw engine_error("family reduction vanishes at the order");
        }
        if (l <= last) fs.reduced.push_back(FamilyEquation{l, std::move(reduced)});
    }
    return fs;
}

LeadingFactorization factor_leading_form(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial_error("leading form factorization");

    const auto& terms = p.terms();
    if (terms.size() == 2) {
        for (int first : {0, 1}) {
            const Term& square = terms[first];
            const Term& even = terms[1 - first];
            if (square.coeff != GaussianRational(1) || even.coeff != GaussianRational(1)) continue;
            if (square.mono.factors.size() != 1 || even.mono.factors.size() != 1) continue;
            const auto& [v, ve] = square.mono.factors[0];
            const auto& [w, we] = even.mono.factors[0];
            if (ve != 2 || we < 2 || we % 2 != 0 || v == w) continue;

            Polynomial root = Polynomial::from_monomial(Monomial::variable(w, we / 2));
            Polynomial base = Polynomial::variable(v);
            LeadingFactorization out;
            out.split = true;
            out.factors.push_back({base + GaussianRational::imaginary_unit() * root, 1});
            out.factors.push_back({base - GaussianRational::imaginary_unit() * root, 1});
            if (!verify_claimed_factorization(p, out.factors)) {
                throw engine_error("leading form factors do not multiply back to the input");
            }
            return out;
        }
    }
    return LeadingFactorization{{LeadingFactor{p, 1}}, false};
}

bool verify_claimed_factorization(const Polynomial& p, const std::vector<LeadingFactor>& claimed) {
    Polynomial product = Polynomial::constant(GaussianRational(1));
    for (const LeadingFactor& f : claimed) product *= f.factor.pow(f.multiplicity);
    return product == p;
}

bool verify_recursion(const FamilySystem& fs) {
    if (fs.reduced.empty()) return true;
    const std::uint64_t r = fs.o;
    const Polynomial& f_r = fs.at(r);
    const std::uint64_t lead[] = {fs.divisor.mu_x(), fs.divisor.mu_y(), fs.divisor.mu_z()};
    const Family fams[] = {Family::a, Family::b, Family::c};

    Polynomial deriv[3];
    for (int idx = 0; idx < 3; ++idx) {
        deriv[idx] = f_r.partial_derivative(jet_variable(fams[idx], static_cast<std::uint32_t>(lead[idx])));
    }

    for (const FamilyEquation& fe : fs.reduced) {
        if (fe.u <= r) continue;
        const std::uint64_t i = fe.u - r;
        Polynomial remainder = fe.f;
        for (int idx = 0; idx < 3; ++idx) {
            VariableId shifted = jet_variable(fams[idx], static_cast<std::uint32_t>(lead[idx] + i));
            remainder -= deriv[idx] * Polynomial::variable(shifted);
        }
        for (int idx = 0; idx < 3; ++idx) {
            auto top = remainder.max_jet_index(fams[idx]);
            if (top && *top >= lead[idx] + i) return false;
        }
    }
    return true;
}

std::vector<Polynomial> expand_in_s(const Polynomial& p,
                                    const std::map<VariableId, SeriesSpec>& series,
                                    std::uint64_t depth) {
    std::map<VariableId, Polynomial> assignment;
    for (const auto& [v, spec] : series) {
        if (v.is_aux() || v.is_wedge()) {
            throw engine_error("series keys must be plain jet variables");
        }
        Polynomial expansion;
        if (spec.normalized) {
            Monomial m = spec.start == 0 ? Monomial::one()
                                         : Monomial::variable(var_s(), static_cast<std::uint32_t>(spec.start));
            expansion = Polynomial::from_monomial(std::move(m));
        } else {
            if (spec.start == 0) expansion = Polynomial::variable(v);
            for (std::uint64_t q = std::max<std::uint64_t>(1, spec.start); q <= depth; ++q) {
                Monomial m = Monomial::from_powers(
                    {{wedge_variable(v.family(), v.primary(), static_cast<std::uint32_t>(q)), 1},
                     {var_s(), static_cast<std::uint32_t>(q)}});
                expansion += Polynomial::from_monomial(std::move(m));
            }
        }
        assignment.emplace(v, std::move(expansion));
    }

    Polynomial substituted = p.substitute(assignment);
    std::vector<std::vector<Term>> buckets(depth + 1);
    for (const Term& t : substituted.terms()) {
        std::uint32_t ds = t.mono.degree_of(var_s());
        if (ds > depth) continue;
        Monomial stripped = t.mono;
        if (ds > 0) {
            auto q = t.mono.divided_by(Monomial::variable(var_s(), ds));
            if (!q) throw engine_error("wedge expansion failed to strip the s power");
            stripped = std::move(*q);
        }
        buckets[ds].push_back(Term{std::move(stripped), t.coeff});
    }

    std::vector<Polynomial> out;
    out.reserve(depth + 1);
    for (auto& bucket : buckets) out.push_back(Polynomial::from_terms(std::move(bucket)));
    return out;
}

WedgeExpansion expand_wedge(const FamilySystem& fs, const std::map<VariableId, SeriesSpec>& series,
                            std::uint64_t depth) {
    WedgeExpansion we;
    we.k = fs.k;
    we.depth = depth;
    for (const FamilyEquation& fe : fs.reduced) {
        we.coefficients.emplace(fe.u, expand_in_s(fe.f, series, depth));
    }
    return we;
}

ThetaExtraction extract_g_theta(const WedgeExpansion& we, std::uint64_t u,
                                const std::vector<VariableId>& declared_zero) {
    std::map<VariableId, Polynomial> kill;
    for (VariableId v : declared_zero) kill.emplace(v, Polynomial::zero());

    for (std::uint64_t v = 0; v <= we.depth; ++v) {
        Polynomial g = we.at(u, v).substitute(kill);
        if (!g.is_zero()) return ThetaExtraction{v, std::move(g)};
    }
    throw budget_exceeded("wedge coefficient extraction at level " + std::to_string(u), we.depth);
}

ThetaExtraction extract_next(const WedgeExpansion& we, std::uint64_t u,
                             const std::vector<VariableId>& declared_zero) {
    ThetaExtraction lead = extract_g_theta(we, u, declared_zero);
    const std::uint64_t next = lead.theta + 1;
    if (next > we.depth) {
        throw budget_exceeded("wedge coefficient extraction at level " + std::to_string(u), we.depth);
    }
    std::map<VariableId, Polynomial> kill;
    for (VariableId v : declared_zero) kill.emplace(v, Polynomial::zero());
    return ThetaExtraction{next, we.at(u, next).substitute(kill)};
}

}  // namespace jetspace
