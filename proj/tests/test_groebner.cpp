#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jetspace/errors.hpp"
#include "jetspace/groebner.hpp"
#include "jetspace/jets.hpp"
#include "jetspace/parser.hpp"

using namespace jetspace;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text); }

IdealHandle ideal_of(const std::vector<std::string>& gens,
                     MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<Polynomial> parsed;
    parsed.reserve(gens.size());
    for (const std::string& g : gens) parsed.push_back(P(g));
    return buchberger(std::move(parsed), std::move(order));
}

Polynomial spolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const Term& ltf = f.leading_term(order);
    const Term& ltg = g.leading_term(order);
    Monomial lcm = ltf.mono.lcm(ltg.mono);
    Polynomial left = Polynomial::from_monomial(*lcm.divided_by(ltf.mono),
                                                GaussianRational(1) / ltf.coeff);
    Polynomial right = Polynomial::from_monomial(*lcm.divided_by(ltg.mono),
                                                 GaussianRational(1) / ltg.coeff);
    return left * f - right * g;
}

void check_buchberger_criterion(const IdealHandle& I) {
    const auto& basis = I.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            CHECK(normal_form(spolynomial(basis[i], basis[j], I.order()), I).is_zero());
        }
    }
}

bool in_radical(const Polynomial& p, const IdealHandle& I) {
    std::vector<Polynomial> gens = I.generators();
    gens.push_back(Polynomial::variable(aux_variable("@rad")) * p -
                   Polynomial::constant(GaussianRational(1)));
    return is_unit_ideal(buchberger(std::move(gens), I.order(), I.budget()));
}

// I cap J through the classic one-parameter trick: t*I + (1-t)*J, eliminate t.
IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J) {
    Polynomial t = Polynomial::variable(var_t());
    Polynomial one_minus_t = Polynomial::constant(GaussianRational(1)) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(t * g);
    for (const Polynomial& g : J.generators()) gens.push_back(one_minus_t * g);
    return eliminate(buchberger(std::move(gens), I.order(), I.budget()), {var_t()});
}

GaussianRational random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(-4, 4);
    std::uniform_int_distribution<int> imaginary(0, 3);
    int n = pick(rng);
    if (n == 0) n = 1;
    if (imaginary(rng) == 0) return GaussianRational(Rational(0), Rational(n));
    return GaussianRational(Rational(n));
}

}  // namespace

TEST_CASE("reduced bases of simple ideals") {
    IdealHandle axes = ideal_of({"x", "y"}, MonomialOrder::lex());
    CHECK(axes.basis() == std::vector<Polynomial>{P("x"), P("y")});

    IdealHandle conjugates = ideal_of({"c2-i*a1^2", "c2+i*a1^2"});
    CHECK(conjugates.basis() == std::vector<Polynomial>{P("c2"), P("a1^2")});
    check_buchberger_criterion(conjugates);

    IdealHandle unit = ideal_of({"1"});
    CHECK(is_unit_ideal(unit));
    CHECK(unit.basis() == std::vector<Polynomial>{P("1")});
    CHECK(is_unit_ideal(ideal_of({"x", "x-1"})));

    IdealHandle zero = buchberger({});
    CHECK(zero.basis().empty());
    CHECK(!is_unit_ideal(zero));
    CHECK(normal_form(P("x+1"), zero) == P("x+1"));
    CHECK(buchberger({Polynomial::zero()}).basis().empty());
    CHECK(!is_unit_ideal(ideal_of({"x*y"})));
}

TEST_CASE("normal forms reduce modulo the cached basis") {
    // Under lex the generator is headed by c2, so reduction substitutes c2 -> i*a1^2.
    IdealHandle I = ideal_of({"c2-i*a1^2"}, MonomialOrder::lex());
    CHECK(normal_form(P("c2^2"), I) == P("-a1^4"));
    CHECK(normal_form(P("c2-i*a1^2"), I).is_zero());
    CHECK(normal_form(P("1"), I) == P("1"));
    CHECK(is_member(Polynomial::zero(), I));

    Polynomial reduced = normal_form(P("c2^3+a1^2*c2+7"), I);
    CHECK(normal_form(reduced, I) == reduced);
}

TEST_CASE("membership recognizes jet equations modulo the family ideal") {
    auto family_ideal = [](const JetSystem& js, const DivisorRecord& d) {
        FamilySystem fs = reduce_to_family(js, d);
        std::vector<Polynomial> gens;
        for (VariableId v : fs.vanishing) gens.push_back(Polynomial::variable(v));
        for (const FamilyEquation& fe : fs.reduced) gens.push_back(fe.f);
        return buchberger(std::move(gens), MonomialOrder::grevlex(), GroebnerBudget{1024, 500000});
    };

    JetSystem js12 = expand_jet(SurfaceEquation(P("z^2+y^3+x^4")), 12);
    IdealHandle deep = family_ideal(js12, DivisorRecord{"E6", {3, 4, 6}, {}});
    for (std::uint64_t l = 1; l <= 12; ++l) {
        CHECK(is_member(js12.at(l), deep));
    }
    CHECK(!is_member(P("c6^2"), deep));

    JetSystem js9 = expand_jet(SurfaceEquation(P("z^2+y^3+x^4")), 9);
    IdealHandle mid = family_ideal(js9, DivisorRecord{"E4", {2, 3, 4}, {}});
    for (std::uint64_t l = 1; l <= 9; ++l) {
        CHECK(is_member(js9.at(l), mid));
    }
    CHECK(!is_member(P("c4^2"), mid));
    check_buchberger_criterion(mid);
}

TEST_CASE("division witnesses recompose the dividend") {
    IdealHandle I = ideal_of({"y1*y2", "y2*x21+y1*x22"});
    Polynomial p = P("y1^2*y2*x22+y2^2*x21+3*y1*y2");
    DivisionWitness w = divide_with_witness(p, I);
    Polynomial recomposed = w.remainder;
    REQUIRE(w.quotients.size() == I.basis().size());
    for (std::size_t i = 0; i < w.quotients.size(); ++i) {
        recomposed += w.quotients[i] * I.basis()[i];
    }
    CHECK(recomposed == p);
    for (const Term& t : w.remainder.terms()) {
        for (const Polynomial& b : I.basis()) {
            CHECK(!b.leading_term(I.order()).mono.divides(t.mono));
        }
    }
}

TEST_CASE("elimination projects out chosen variables") {
    IdealHandle parabola = ideal_of({"x-t", "y-t^2"});
    IdealHandle projected = eliminate(parabola, {var_t()});
    CHECK(same_ideal(projected, ideal_of({"y-x^2"})));
    for (const Polynomial& p : projected.basis()) {
        for (VariableId v : p.variables()) CHECK(v != var_t());
    }
    CHECK(projected.ambient() == std::vector<VariableId>{var_x(), var_y()});

    CHECK(is_unit_ideal(eliminate(ideal_of({"u*x-1", "x"}), {var_u()})));

    IdealHandle untouched = eliminate(parabola, {});
    CHECK(same_ideal(untouched, parabola));
    CHECK(untouched.generators() == parabola.generators());
}

TEST_CASE("saturation by the toy distinguishing factor") {
    IdealHandle I = ideal_of({"y1*y2", "y2*x21+y1*x22", "y1"});
    SaturationResult r = saturate(I, P("y2"));
    CHECK(same_ideal(r.ideal, ideal_of({"y1", "x21"})));
    CHECK(r.exponent_bound == 1);
    CHECK(r.ideal.ambient() == I.ambient());

    for (const Polynomial& g : I.generators()) CHECK(is_member(g, r.ideal));
    Polynomial power = Polynomial::constant(GaussianRational(1));
    for (std::uint64_t n = 0; n < r.exponent_bound; ++n) power *= P("y2");
    for (const Polynomial& g : r.ideal.basis()) CHECK(is_member(power * g, I));

    SaturationResult again = saturate(r.ideal, P("y2"));
    CHECK(same_ideal(again.ideal, r.ideal));
    CHECK(again.exponent_bound == 0);
}

TEST_CASE("saturation shortcuts and edge cases") {
    IdealHandle I = ideal_of({"y1*y2", "y1"});
    SaturationResult constant = saturate(I, P("3"));
    CHECK(same_ideal(constant.ideal, I));
    CHECK(constant.exponent_bound == 0);

    SaturationResult principal = saturate(ideal_of({"y1*x21+y1*y2^2"}), P("y1"));
    CHECK(same_ideal(principal.ideal, ideal_of({"x21+y2^2"})));

    CHECK_THROWS_AS(saturate(I, Polynomial::zero()), error);
}

TEST_CASE("distinguished ideals separate the toy leading factors") {
    IdealHandle I = ideal_of({"y1*y2", "y2*x21+y1*x22"});

    IdealHandle P1 = distinguished_ideal(I, P("y1"), {P("y2")});
    IdealHandle P2 = distinguished_ideal(I, P("y2"), {P("y1")});
    CHECK(same_ideal(P1, ideal_of({"y1", "x21"})));
    CHECK(same_ideal(P2, ideal_of({"y2", "x22"})));
    CHECK(!same_ideal(P1, P2));

    CHECK(is_member(P("y1"), P1));
    CHECK(!is_member(P("y2"), P1));
    CHECK(is_member(P("y2"), P2));
    CHECK(!is_member(P("y1"), P2));
    for (const Polynomial& g : I.generators()) {
        CHECK(is_member(g, P1));
        CHECK(is_member(g, P2));
    }

    CHECK(ideal_dimension(P1) == 2);
    CHECK(ideal_dimension(P2) == 2);

    IdealHandle plain = distinguished_ideal(I, P("x22-1"), {P("1")});
    CHECK(same_ideal(plain, ideal_of({"y1*y2", "y2*x21+y1*x22", "x22-1"})));

    CHECK_THROWS_AS(distinguished_ideal(I, P("y1"), {}), error);
}

TEST_CASE("the toy ideal has exactly the three componentwise primes") {
    IdealHandle I = ideal_of({"y1*y2", "y2*x21+y1*x22"});
    std::vector<IdealHandle> candidates{ideal_of({"y1", "y2"}), ideal_of({"y1", "x21"}),
                                        ideal_of({"y2", "x22"})};

    for (const IdealHandle& c : candidates) {
        for (const Polynomial& g : I.generators()) CHECK(is_member(g, c));
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (i == j) continue;
            bool contained = true;
            for (const Polynomial& g : candidates[i].basis()) {
                if (!is_member(g, candidates[j])) contained = false;
            }
            CHECK(!contained);
        }
    }

    IdealHandle meet = ideal_intersection(ideal_intersection(candidates[0], candidates[1]),
                                          candidates[2]);
    for (const Polynomial& g : meet.basis()) CHECK(in_radical(g, I));

    IdealHandle distinguished = distinguished_ideal(I, P("y1"), {P("y2")});
    CHECK(same_ideal(distinguished, candidates[1]));
}

TEST_CASE("dimension by independent variable sets") {
    IdealHandle plane = ideal_of({"y1", "x21"}).with_ambient(
        {aux_variable("y1"), aux_variable("y2"), aux_variable("x21"), aux_variable("x22")});
    CHECK(ideal_dimension(plane) == 2);

    IdealHandle zero = buchberger({}).with_ambient({var_x(), var_y(), var_z()});
    CHECK(ideal_dimension(zero) == 3);

    CHECK(ideal_dimension(ideal_of({"y-x^2"})) == 1);
    CHECK(ideal_dimension(ideal_of({"x", "y"})) == 0);
    CHECK_THROWS_AS(ideal_dimension(ideal_of({"1"})), error);
}

TEST_CASE("saturation exposes an inconsistent wedge leading system") {
    IdealHandle I = ideal_of({"2*c3*c4+4*a2^3", "c3-2*i*a2", "c4+i*a2^2"});
    CHECK(!is_unit_ideal(I));
    CHECK(is_unit_ideal(saturate(I, P("a2*c4")).ideal));
}

TEST_CASE("budgets interrupt long computations observably") {
    GroebnerBudget tiny{4096, 3};
    CHECK_THROWS_AS(buchberger({P("c2-i*a1^2"), P("c2+i*a1^2")}, MonomialOrder::grevlex(), tiny),
                    budget_exceeded);
    GroebnerBudget one_poly{1, 1000000};
    CHECK_THROWS_AS(buchberger({P("x^2-y"), P("x*y-1")}, MonomialOrder::grevlex(), one_poly),
                    budget_exceeded);
}

TEST_CASE("random ideals satisfy the buchberger criterion and membership properties") {
    std::mt19937_64 rng(20260823);
    const std::vector<VariableId> pool{jet_variable(Family::a, 1), jet_variable(Family::a, 2),
                                       jet_variable(Family::b, 1), jet_variable(Family::b, 2),
                                       jet_variable(Family::c, 1)};
    std::uniform_int_distribution<int> var_count(2, 5);
    std::uniform_int_distribution<int> gen_count(2, 3);
    std::uniform_int_distribution<int> term_count(2, 3);
    std::uniform_int_distribution<int> exponent(0, 2);

    auto random_poly = [&](int nvars) {
        std::vector<Term> terms;
        int nterms = term_count(rng);
        for (int t = 0; t < nterms; ++t) {
            std::vector<std::pair<VariableId, std::uint32_t>> powers;
            std::uint64_t total = 0;
            for (int v = 0; v < nvars; ++v) {
                std::uint32_t e = static_cast<std::uint32_t>(exponent(rng));
                if (e == 0) continue;
                if (total + e > 4) continue;
                total += e;
                powers.emplace_back(pool[v], e);
            }
            terms.push_back(Term{Monomial::from_powers(std::move(powers)), random_coeff(rng)});
        }
        return Polynomial::from_terms(std::move(terms));
    };

    int successes = 0;
    for (int attempt = 0; attempt < 80 && successes < 50; ++attempt) {
        int nvars = var_count(rng);
        std::vector<Polynomial> gens;
        int ngens = gen_count(rng);
        for (int g = 0; g < ngens; ++g) gens.push_back(random_poly(nvars));

        try {
            IdealHandle I = buchberger(gens, MonomialOrder::grevlex(), GroebnerBudget{256, 60000});
            check_buchberger_criterion(I);
            for (const Polynomial& g : gens) CHECK(is_member(g, I));

            Polynomial combination;
            for (const Polynomial& g : gens) combination += random_poly(nvars) * g;
            CHECK(is_member(combination, I));

            DivisionWitness w = divide_with_witness(combination, I);
            CHECK(w.remainder.is_zero());
            Polynomial rebuilt;
            for (std::size_t i = 0; i < w.quotients.size(); ++i) {
                rebuilt += w.quotients[i] * I.basis()[i];
            }
            CHECK(rebuilt == combination);

            Polynomial probe = random_poly(nvars);
            Polynomial reduced = normal_form(probe, I);
            CHECK(normal_form(reduced, I) == reduced);
            ++successes;
        } catch (const budget_exceeded&) {
            continue;
        }
    }
    CHECK(successes >= 50);
}
