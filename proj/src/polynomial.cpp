#include "jetspace/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return canonical_compare(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::constant(GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back(Term{Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VariableId v) { return from_monomial(Monomial::variable(v)); }

Polynomial Polynomial::from_monomial(Monomial m, GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    normalize(terms);
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

GaussianRational Polynomial::constant_value() const {
    if (is_zero()) return GaussianRational(0);
    if (!is_constant()) throw engine_error("constant_value on a non-constant polynomial");
    return terms_[0].coeff;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        auto cmp = canonical_compare(i->mono, j->mono);
        if (cmp == 0) {
            GaussianRational c = i->coeff + j->coeff;
            if (!c.is_zero()) merged.push_back(Term{i->mono, std::move(c)});
            ++i;
            ++j;
        } else if (cmp > 0) {
            merged.push_back(*i++);
        } else {
            merged.push_back(*j++);
        }
    }
    merged.insert(merged.end(), i, terms_.end());
    merged.insert(merged.end(), j, o.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator-(const Polynomial& x) {
    Polynomial out = x;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    std::vector<Term> products;
    products.reserve(x.terms().size() * y.terms().size());
    for (const auto& tx : x.terms())
        for (const auto& ty : y.terms())
            products.push_back(Term{tx.mono.mul(ty.mono), tx.coeff * ty.coeff});
    return Polynomial::from_terms(std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = Polynomial::constant(GaussianRational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& assignment) const {
    Polynomial out;
    for (const auto& t : terms_) {
        Polynomial term_value = Polynomial::constant(t.coeff);
        for (const auto& [v, e] : t.mono.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                term_value *= Polynomial::from_monomial(Monomial::variable(v, e));
            } else {
                term_value *= it->second.pow(e);
            }
        }
        out += term_value;
    }
    return out;
}

Polynomial Polynomial::partial_derivative(VariableId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree_of(v);
        if (e == 0) continue;
        Monomial reduced = *t.mono.divided_by(Monomial::variable(v));
        out.push_back(Term{std::move(reduced), t.coeff * GaussianRational(Rational(e))});
    }
    return Polynomial::from_terms(std::move(out));
}

GaussianRational Polynomial::evaluate(const std::map<VariableId, GaussianRational>& assignment) const {
    GaussianRational sum(0);
    for (const auto& t : terms_) {
        GaussianRational value = t.coeff;
        for (const auto& [v, e] : t.mono.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw missing_assignment(v.to_string());
            value *= gq_pow(it->second, e);
        }
        sum += value;
    }
    return sum;
}

Rational Polynomial::weighted_order(const WeightVector& w) const {
    if (is_zero()) throw zero_polynomial_error("weighted order");
    Rational best = weighted_degree(terms_[0].mono, w);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        best = std::min(best, weighted_degree(terms_[i].mono, w));
    return best;
}

Polynomial Polynomial::leading_form(const WeightVector& w) const {
    if (is_zero()) throw zero_polynomial_error("leading form");
    Rational order = weighted_order(w);
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (weighted_degree(t.mono, w) == order) out.push_back(t);
    return Polynomial::from_terms(std::move(out));
}

std::optional<Rational> Polynomial::is_weighted_homogeneous(const WeightVector& w) const {
    if (is_zero()) throw zero_polynomial_error("weighted homogeneity");
    Rational order = weighted_degree(terms_[0].mono, w);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (weighted_degree(terms_[i].mono, w) != order) return std::nullopt;
    return order;
}

std::vector<VariableId> Polynomial::variables() const {
    std::vector<VariableId> out;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::uint32_t> Polynomial::max_jet_index(Family f) const {
    std::optional<std::uint32_t> best;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors)
            if (!v.is_aux() && !v.is_wedge() && v.family() == f)
                best = best ? std::max(*best, v.primary()) : v.primary();
    return best;
}

std::optional<std::uint64_t> Polynomial::total_degree() const {
    std::optional<std::uint64_t> best;
    for (const auto& t : terms_) {
        std::uint64_t d = t.mono.total_degree();
        best = best ? std::max(*best, d) : d;
    }
    return best;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw zero_polynomial_error("leading term");
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].mono, best->mono) > 0) best = &terms_[i];
    return *best;
}

namespace {

std::string term_to_string(const Term& t) {
    if (t.mono.is_one()) return gq_to_string(t.coeff);
    const GaussianRational& c = t.coeff;
    if (c == GaussianRational(1)) return t.mono.to_string();
    if (c == GaussianRational(-1)) return "-" + t.mono.to_string();
    if (c.is_real() || c.is_imaginary()) return gq_to_string(c) + "*" + t.mono.to_string();
    return "(" + gq_to_string(c) + ")*" + t.mono.to_string();
}

}  // namespace

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string s = term_to_string(t);
        if (!out.empty() && s[0] != '-') out += '+';
        out += s;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace jetspace
