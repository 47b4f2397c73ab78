#include "jetspace/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    const Term& lt = p.leading_term(order);
    if (lt.coeff == GaussianRational(1)) return p;
    return p * lt.coeff.inverse();
}

struct Reducer {
    const MonomialOrder& order;
    const GroebnerBudget& budget;
    std::uint64_t steps = 0;

    void bump() {
        if (++steps > budget.max_reductions) throw budget_exceeded("groebner reduction", steps);
    }

    // Full division: the remainder has no term divisible by a divisor leading
    // monomial. Divisors must be nonzero; quotients, when requested, align with them.
    Polynomial reduce(Polynomial p, const std::vector<Polynomial>& divisors,
                      std::vector<Polynomial>* quotients = nullptr) {
        std::vector<Term> remainder;
        while (!p.is_zero()) {
            Term lt = p.leading_term(order);
            bool divided = false;
            for (std::size_t i = 0; i < divisors.size(); ++i) {
                const Term& dlt = divisors[i].leading_term(order);
                auto q = lt.mono.divided_by(dlt.mono);
                if (!q) continue;
                Polynomial factor = Polynomial::from_monomial(std::move(*q), lt.coeff / dlt.coeff);
                p -= factor * divisors[i];
                if (quotients) (*quotients)[i] += factor;
                divided = true;
                bump();
                break;
            }
            if (!divided) {
                p -= Polynomial::from_monomial(lt.mono, lt.coeff);
                remainder.push_back(std::move(lt));
                bump();
            }
        }
        return Polynomial::from_terms(std::move(remainder));
    }
};

// Buchberger with the coprime and chain criteria, followed by minimalization
// and tail inter-reduction; output sorted ascending by leading term.
std::vector<Polynomial> reduced_basis(const std::vector<Polynomial>& input,
                                      const MonomialOrder& order, const GroebnerBudget& budget) {
    std::vector<Polynomial> g;
    for (const Polynomial& p : input) {
        if (!p.is_zero()) g.push_back(make_monic(p, order));
    }
    if (g.empty()) return {};

    Reducer red{order, budget};
    auto lt_mono = [&](std::size_t i) -> const Monomial& { return g[i].leading_term(order).mono; };

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < g.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    }

    while (!pending.empty()) {
        auto best = pending.end();
        Monomial best_lcm;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Monomial l = lt_mono(it->first).lcm(lt_mono(it->second));
            if (best == pending.end() || order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        if (best_lcm == lt_mono(i).mul(lt_mono(j))) continue;

        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j || !lt_mono(k).divides(best_lcm)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            chained = pending.count({p1.first, p1.second}) == 0 &&
                      pending.count({p2.first, p2.second}) == 0;
        }
        if (chained) continue;

        auto qi = best_lcm.divided_by(lt_mono(i));
        auto qj = best_lcm.divided_by(lt_mono(j));
        Polynomial s = Polynomial::from_monomial(std::move(*qi)) * g[i] -
                       Polynomial::from_monomial(std::move(*qj)) * g[j];
        Polynomial r = red.reduce(std::move(s), g);
        if (r.is_zero()) continue;

        g.push_back(make_monic(r, order));
        if (g.size() > budget.max_basis) throw budget_exceeded("groebner basis size", g.size());
        const std::size_t t = g.size() - 1;
        for (std::size_t l = 0; l < t; ++l) pending.insert({l, t});
    }

    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return order.less(lt_mono(x), lt_mono(y)); });

    std::vector<Polynomial> kept;
    for (std::size_t id : idx) {
        bool redundant = false;
        for (const Polynomial& h : kept) {
            if (h.leading_term(order).mono.divides(lt_mono(id))) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g[id]);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(kept.size() - 1);
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (j != i) others.push_back(kept[j]);
            }
            Polynomial r = red.reduce(kept[i], others);
            if (r.is_zero()) throw engine_error("minimal basis element reduced to zero");
            r = make_monic(r, order);
            if (r != kept[i]) {
                kept[i] = std::move(r);
                changed = true;
            }
        }
    }
    return kept;
}

std::vector<VariableId> sorted_union(std::vector<VariableId> base,
                                     const std::vector<Polynomial>& polys) {
    std::set<VariableId> vars(base.begin(), base.end());
    for (const Polynomial& p : polys) {
        for (VariableId v : p.variables()) vars.insert(v);
    }
    return {vars.begin(), vars.end()};
}

}  // namespace

IdealHandle::IdealHandle(std::vector<Polynomial> generators, MonomialOrder order,
                         GroebnerBudget budget)
    : generators_(std::move(generators)), order_(std::move(order)), budget_(budget) {
    basis_ = reduced_basis(generators_, order_, budget_);
    ambient_ = sorted_union({}, generators_);
}

IdealHandle IdealHandle::with_ambient(std::vector<VariableId> ambient) const {
    std::sort(ambient.begin(), ambient.end());
    ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
    for (const Polynomial& p : basis_) {
        for (VariableId v : p.variables()) {
            if (!std::binary_search(ambient.begin(), ambient.end(), v)) {
                throw engine_error("ambient must contain every basis variable");
            }
        }
    }
    IdealHandle out = *this;
    out.ambient_ = std::move(ambient);
    return out;
}

IdealHandle buchberger(std::vector<Polynomial> generators, MonomialOrder order,
                       GroebnerBudget budget) {
    return IdealHandle(std::move(generators), std::move(order), budget);
}

DivisionWitness divide_with_witness(const Polynomial& p, const IdealHandle& I) {
    DivisionWitness w;
    w.quotients.assign(I.basis().size(), Polynomial::zero());
    Reducer red{I.order(), I.budget()};
    w.remainder = red.reduce(p, I.basis(), &w.quotients);
    return w;
}

Polynomial normal_form(const Polynomial& p, const IdealHandle& I) {
    Reducer red{I.order(), I.budget()};
    return red.reduce(p, I.basis());
}

bool is_member(const Polynomial& p, const IdealHandle& I) { return normal_form(p, I).is_zero(); }

bool is_unit_ideal(const IdealHandle& I) {
    return I.basis().size() == 1 && I.basis()[0].is_constant() && !I.basis()[0].is_zero();
}

bool same_ideal(const IdealHandle& I, const IdealHandle& J) {
    if (I.order().kind == J.order().kind && I.order().front == J.order().front) {
        return I.basis() == J.basis();
    }
    IdealHandle rebuilt(J.generators(), I.order(), I.budget());
    return I.basis() == rebuilt.basis();
}

IdealHandle eliminate(const IdealHandle& I, const std::vector<VariableId>& kill) {
    if (kill.empty()) return I;
    std::vector<VariableId> killed = kill;
    std::sort(killed.begin(), killed.end());

    IdealHandle blocked(I.generators(), MonomialOrder::block_elimination(kill), I.budget());
    std::vector<Polynomial> kept;
    for (const Polynomial& p : blocked.basis()) {
        bool touches = false;
        for (VariableId v : p.variables()) {
            if (std::binary_search(killed.begin(), killed.end(), v)) {
                touches = true;
                break;
            }
        }
        if (!touches) kept.push_back(p);
    }

    std::vector<VariableId> ambient;
    for (VariableId v : I.ambient()) {
        if (!std::binary_search(killed.begin(), killed.end(), v)) ambient.push_back(v);
    }
    return IdealHandle(std::move(kept), I.order(), I.budget()).with_ambient(std::move(ambient));
}

SaturationResult saturate(const IdealHandle& I, const Polynomial& d) {
    if (d.is_zero()) throw error("saturation by the zero polynomial");
    if (d.is_constant()) return SaturationResult{I, 0};

    const VariableId inverse_marker = aux_variable("@sat");
    for (VariableId v : sorted_union(I.ambient(), {d})) {
        if (v == inverse_marker) throw engine_error("saturation auxiliary variable collides");
    }

    std::vector<Polynomial> gens = I.generators();
    gens.push_back(Polynomial::variable(inverse_marker) * d - Polynomial::constant(GaussianRational(1)));
    IdealHandle extended(std::move(gens), I.order(), I.budget());
    IdealHandle result = eliminate(extended, {inverse_marker});
    result = result.with_ambient(sorted_union(I.ambient(), result.basis()));

    std::uint64_t bound = 0;
    for (const Polynomial& gnew : result.basis()) {
        if (is_member(gnew, I)) continue;
        std::uint64_t n = 1;
        Polynomial power = d;
        while (n <= 64 && !is_member(power * gnew, I)) {
            ++n;
            power *= d;
        }
        if (n > 64) throw budget_exceeded("saturation exponent bound", 64);
        bound = std::max(bound, n);
    }
    return SaturationResult{std::move(result), bound};
}

IdealHandle distinguished_ideal(const IdealHandle& I, const Polynomial& g,
                                const std::vector<Polynomial>& other_factors) {
    if (other_factors.empty()) throw error("distinguished ideal requires at least one excluded factor");
    Polynomial product = Polynomial::constant(GaussianRational(1));
    for (const Polynomial& f : other_factors) {
        if (f.is_zero()) throw error("excluded factor is zero");
        product *= f;
    }

    std::vector<Polynomial> gens = I.generators();
    gens.push_back(g);
    IdealHandle extended(std::move(gens), I.order(), I.budget());
    extended = extended.with_ambient(sorted_union(I.ambient(), {g, product}));
    return saturate(extended, product).ideal;
}

std::uint64_t ideal_dimension(const IdealHandle& I) {
    if (is_unit_ideal(I)) throw error("the unit ideal has no dimension");
    const auto& ambient = I.ambient();
    const std::size_t n = ambient.size();
    if (n > 20) throw budget_exceeded("dimension search variable count", n);
    if (I.basis().empty()) return n;

    std::vector<std::uint32_t> supports;
    for (const Polynomial& p : I.basis()) {
        std::uint32_t mask = 0;
        for (const auto& [v, e] : p.leading_term(I.order()).mono.factors) {
            auto it = std::lower_bound(ambient.begin(), ambient.end(), v);
            if (it == ambient.end() || *it != v) throw engine_error("basis variable outside ambient");
            mask |= 1u << (it - ambient.begin());
        }
        supports.push_back(mask);
    }

    std::uint64_t best = 0;
    auto search = [&](auto&& self, std::size_t pos, std::uint32_t chosen,
                      std::uint64_t count) -> void {
        if (count + (n - pos) <= best) return;
        if (pos == n) {
            best = std::max(best, count);
            return;
        }
        const std::uint32_t with = chosen | (1u << pos);
        bool independent = true;
        for (std::uint32_t sup : supports) {
            if ((sup & ~with) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) self(self, pos + 1, with, count + 1);
        self(self, pos + 1, chosen, count);
    };
    search(search, 0, 0, 0);
    return best;
}

}  // namespace jetspace
