#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jetspace/errors.hpp"
#include "jetspace/jets.hpp"
#include "jetspace/parser.hpp"

using namespace jetspace;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text); }

const SurfaceEquation& e6() {
    static const SurfaceEquation eq(P("z^2+y^3+x^4"));
    return eq;
}

DivisorRecord divisor(const std::string& name, std::uint64_t mx, std::uint64_t my,
                      std::uint64_t mz) {
    return DivisorRecord{name, {mx, my, mz}, {}};
}

const DivisorRecord& e1_record() {
    static const DivisorRecord d = divisor("E1", 2, 2, 3);
    return d;
}
const DivisorRecord& e2_record() {
    static const DivisorRecord d = divisor("E2", 1, 2, 2);
    return d;
}
const DivisorRecord& e4_record() {
    static const DivisorRecord d = divisor("E4", 2, 3, 4);
    return d;
}
const DivisorRecord& e6_record() {
    static const DivisorRecord d = divisor("E6", 3, 4, 6);
    return d;
}

const JetSystem& jets12() {
    static const JetSystem js = expand_jet(e6(), 12);
    return js;
}

const JetSystem& jets8() {
    static const JetSystem js = expand_jet(e6(), 8);
    return js;
}

WeightVector jet_weights(std::uint64_t k) {
    WeightVector w;
    for (std::uint64_t j = 1; j <= k; ++j) {
        for (Family f : {Family::a, Family::b, Family::c}) {
            w.weights[jet_variable(f, static_cast<std::uint32_t>(j))] = Rational(static_cast<long>(j));
        }
    }
    return w;
}

GaussianRational random_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re(num(rng), den(rng));
    Rational im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return GaussianRational(re, im);
}

// Coefficient of s^v in a polynomial whose only variable is s.
GaussianRational pure_s_coefficient(const Polynomial& q, std::uint64_t v) {
    GaussianRational out;
    for (const Term& t : q.terms()) {
        if (t.mono.degree_of(var_s()) != v) continue;
        REQUIRE(t.mono.factors.size() == (v == 0 ? 0u : 1u));
        out += t.coeff;
    }
    return out;
}

}  // namespace

TEST_CASE("surface equations must be singular at the origin in x, y, z") {
    CHECK_NOTHROW(SurfaceEquation(P("z^2+y^3+x^4")));
    CHECK_NOTHROW(SurfaceEquation(P("x^2+y^2+z^2")));
    CHECK_THROWS_AS(SurfaceEquation(P("0")), fixture_error);
    CHECK_THROWS_AS(SurfaceEquation(P("x+y^2")), fixture_error);
    CHECK_THROWS_AS(SurfaceEquation(P("1+x^2")), fixture_error);
    CHECK_THROWS_AS(SurfaceEquation(P("a1^2")), fixture_error);
    CHECK_THROWS_AS(SurfaceEquation(P("x*w")), fixture_error);
}

TEST_CASE("low order jet equations match direct expansion") {
    JetSystem js = expand_jet(e6(), 4);
    CHECK(js.k == 4);
    CHECK(js.at(1).is_zero());
    CHECK(js.at(2) == P("c1^2"));
    CHECK(js.at(3) == P("2*c1*c2+b1^3"));
    CHECK(js.at(4) == P("2*c1*c3+c2^2+3*b1^2*b2+a1^4"));
    CHECK_THROWS_AS(js.at(0), error);
    CHECK_THROWS_AS(js.at(5), error);
    CHECK_THROWS_AS(expand_jet(e6(), 0), error);
}

TEST_CASE("jet equations are weighted homogeneous and local") {
    const JetSystem& js = jets12();
    WeightVector w = jet_weights(12);
    for (std::uint64_t l = 1; l <= 12; ++l) {
        const Polynomial& f = js.at(l);
        if (f.is_zero()) continue;
        auto degree = f.is_weighted_homogeneous(w);
        REQUIRE(degree.has_value());
        CHECK(*degree == Rational(static_cast<long>(l)));
        for (Family fam : {Family::a, Family::b, Family::c}) {
            auto top = f.max_jet_index(fam);
            CHECK((!top || *top <= l));
        }
    }
}

TEST_CASE("jet equations match the surface expansion of random arcs") {
    std::mt19937_64 rng(911);
    auto t_coefficient = [](const Polynomial& p, std::uint64_t l) {
        Monomial target = l == 0 ? Monomial::one()
                                 : Monomial::from_powers({{var_t(), static_cast<std::uint32_t>(l)}});
        for (const Term& t : p.terms()) {
            if (t.mono == target) return t.coeff;
        }
        return GaussianRational(0);
    };
    for (int trial = 0; trial < 12; ++trial) {
        const std::uint64_t k = trial < 10 ? 8 : 12;
        const JetSystem& js = k == 8 ? jets8() : jets12();

        std::map<VariableId, GaussianRational> values;
        Polynomial arc_x, arc_y, arc_z;
        for (std::uint64_t j = 1; j <= k; ++j) {
            Monomial tj = Monomial::from_powers({{var_t(), static_cast<std::uint32_t>(j)}});
            for (Family f : {Family::a, Family::b, Family::c}) {
                GaussianRational v = random_value(rng);
                values[jet_variable(f, static_cast<std::uint32_t>(j))] = v;
                Polynomial part = Polynomial::from_monomial(tj, v);
                if (f == Family::a) arc_x += part;
                if (f == Family::b) arc_y += part;
                if (f == Family::c) arc_z += part;
            }
        }
        Polynomial expanded = arc_z.pow(2) + arc_y.pow(3) + arc_x.pow(4);

        CHECK(t_coefficient(expanded, 0) == GaussianRational(0));
        for (std::uint64_t l = 1; l <= k; ++l) {
            CHECK(js.at(l).evaluate(values) == t_coefficient(expanded, l));
        }
    }
}

TEST_CASE("contact orders over the four divisor weight triples") {
    auto orders = [&](const DivisorRecord& d, std::uint64_t k) {
        return contact_orders(e6(), d, k);
    };
    CHECK(orders(e1_record(), 8) == std::pair<std::uint64_t, std::uint64_t>{6, 11});
    CHECK(orders(e1_record(), 11).second == 14);
    CHECK(orders(e1_record(), 12).second == 15);
    CHECK(orders(e2_record(), 8) == std::pair<std::uint64_t, std::uint64_t>{4, 10});
    CHECK(orders(e2_record(), 5).second == 7);
    CHECK(orders(e2_record(), 11).second == 13);
    CHECK(orders(e2_record(), 12).second == 14);
    CHECK(orders(e4_record(), 8) == std::pair<std::uint64_t, std::uint64_t>{8, 12});
    CHECK(orders(e4_record(), 9).second == 13);
    CHECK(orders(e4_record(), 11).second == 15);
    CHECK(orders(e4_record(), 12).second == 16);
    CHECK(orders(e6_record(), 12) == std::pair<std::uint64_t, std::uint64_t>{12, 18});
}

TEST_CASE("family reduction keeps the frozen equations for the first family") {
    FamilySystem fs = reduce_to_family(jets12(), e1_record());
    CHECK(fs.o == 6);
    CHECK(fs.o_k == 15);
    CHECK(fs.reduced.size() == 7);  // levels 6..12
    std::vector<VariableId> expected_vanishing{jet_variable(Family::a, 1), jet_variable(Family::b, 1),
                                               jet_variable(Family::c, 1), jet_variable(Family::c, 2)};
    CHECK(fs.vanishing == expected_vanishing);

    CHECK(fs.at(6) == P("c3^2+b2^3"));
    CHECK(fs.at(7) == P("2*c3*c4+3*b2^2*b3"));
    CHECK(fs.at(8) == P("c4^2+2*c3*c5+3*b2^2*b4+3*b2*b3^2+a2^4"));
    CHECK(fs.at(9) == P("2*c4*c5+2*c3*c6+b3^3+6*b2*b3*b4+3*b2^2*b5+4*a2^3*a3"));
    CHECK(fs.at(10) ==
          P("c5^2+2*c4*c6+2*c3*c7+3*b3^2*b4+3*b2^2*b6+6*b2*b3*b5+3*b2*b4^2+6*a2^2*a3^2+4*a2^3*a4"));
    CHECK(fs.at(11) == P("2*c5*c6+2*c4*c7+2*c3*c8+3*b2^2*b7+3*b3^2*b5+3*b3*b4^2+6*b2*b3*b6"
                         "+6*b2*b4*b5+4*a2^3*a5+12*a2^2*a3*a4+4*a2*a3^3"));
}

TEST_CASE("family reduction keeps the frozen equations for the second family") {
    FamilySystem fs = reduce_to_family(jets12(), e2_record());
    CHECK(fs.o == 4);
    CHECK(fs.reduced.size() == 9);  // levels 4..12
    std::vector<VariableId> expected_vanishing{jet_variable(Family::b, 1), jet_variable(Family::c, 1)};
    CHECK(fs.vanishing == expected_vanishing);

    CHECK(fs.at(4) == P("c2^2+a1^4"));
    CHECK(fs.at(5) == P("2*c2*c3+4*a1^3*a2"));
    CHECK(fs.at(6) == P("c3^2+2*c2*c4+b2^3+4*a1^3*a3+6*a1^2*a2^2"));
    CHECK(fs.at(7) == P("2*c3*c4+2*c2*c5+3*b2^2*b3+4*a1^3*a4+12*a1^2*a2*a3+4*a1*a2^3"));
    CHECK(fs.at(8) == P("c4^2+2*c3*c5+2*c2*c6+3*b2^2*b4+3*b2*b3^2+a2^4+4*a1^3*a5"
                        "+12*a1^2*a2*a4+12*a1*a2^2*a3+6*a1^2*a3^2"));
}

TEST_CASE("family reduction keeps the frozen equations for the fourth family") {
    FamilySystem fs = reduce_to_family(jets12(), e4_record());
    CHECK(fs.o == 8);
    CHECK(fs.reduced.size() == 5);  // levels 8..12
    CHECK(fs.vanishing.size() == 6);

    CHECK(fs.at(8) == P("c4^2+a2^4"));
    CHECK(fs.at(9) == P("2*c4*c5+b3^3+4*a2^3*a3"));
    CHECK(fs.at(10) == P("c5^2+2*c4*c6+3*b3^2*b4+6*a2^2*a3^2+4*a2^3*a4"));
    CHECK(fs.at(11) == P("2*c5*c6+2*c4*c7+3*b3^2*b5+3*b3*b4^2+12*a2^2*a3*a4+4*a2^3*a5+4*a2*a3^3"));
}

TEST_CASE("family reduction for the top family gives the closing relation") {
    FamilySystem fs = reduce_to_family(jets12(), e6_record());
    CHECK(fs.o == 12);
    CHECK(fs.o_k == 18);
    REQUIRE(fs.reduced.size() == 1);
    CHECK(fs.at(12) == P("c6^2+b4^3+a3^4"));
    CHECK(fs.vanishing.size() == 10);

    CHECK_THROWS_AS(reduce_to_family(jets8(), e6_record()), error);
    CHECK_THROWS_AS(fs.at(11), error);

    FamilySystem tight = reduce_to_family(jets8(), e4_record());
    REQUIRE(tight.reduced.size() == 1);
    CHECK(tight.at(8) == P("c4^2+a2^4"));
}

TEST_CASE("reduced equations are congruent to the jet equations modulo the vanishing ideal") {
    for (const DivisorRecord* d : {&e1_record(), &e2_record(), &e4_record(), &e6_record()}) {
        FamilySystem fs = reduce_to_family(jets12(), *d);
        std::map<VariableId, Polynomial> kill;
        for (VariableId v : fs.vanishing) kill.emplace(v, Polynomial::zero());
        for (const FamilyEquation& fe : fs.reduced) {
            CHECK((jets12().at(fe.u) - fe.f).substitute(kill).is_zero());
            for (VariableId v : fe.f.variables()) {
                CHECK(kill.find(v) == kill.end());
            }
        }
    }
}

TEST_CASE("second family equations rewrite into the displayed product forms") {
    FamilySystem fs = reduce_to_family(jets12(), e2_record());

    LeadingFactorization lead = factor_leading_form(fs.at(4));
    REQUIRE(lead.split);
    REQUIRE(lead.factors.size() == 2);
    CHECK(lead.factors[1].factor == P("c2-i*a1^2"));

    // Reducing f_{2,5} modulo c2 - i*a1^2 factors exactly.
    std::map<VariableId, Polynomial> first_sub{{jet_variable(Family::c, 2), P("i*a1^2")}};
    CHECK(fs.at(5).substitute(first_sub) == P("2*i*a1^2") * P("c3-2*i*a1*a2"));

    std::map<VariableId, Polynomial> sub{{jet_variable(Family::c, 2), P("i*a1^2")},
                                         {jet_variable(Family::c, 3), P("2*i*a1*a2")}};
    CHECK(fs.at(6).substitute(sub) == P("b2^3+2*i*a1^2*(c4-i*a2^2-2*i*a1*a3)"));
    CHECK(fs.at(7).substitute(sub) == P("3*b2^2*b3+2*i*a1^2*(c5-2*i*a2*a3-2*i*a1*a4)"
                                        "+4*i*a1*a2*(c4-i*a2^2-2*i*a1*a3)"));
    CHECK(fs.at(8).substitute(sub) ==
          P("3*b2^2*b4+3*b2*b3^2+2*i*a1^2*(c6-i*a3^2-2*i*a2*a4-2*i*a1*a5)"
            "+4*i*a1*a2*(c5-2*i*a2*a3-2*i*a1*a4)"
            "+(c4+i*a2^2+2*i*a1*a3)*(c4-i*a2^2-2*i*a1*a3)"));
    CHECK(fs.at(8).substitute(sub) ==
          P("c4^2+4*i*a1*a2*c5+2*i*a1^2*c6+3*b2^2*b4+3*b2*b3^2+a2^4+4*a1^3*a5"
            "+12*a1^2*a2*a4+12*a1*a2^2*a3+6*a1^2*a3^2"));
    CHECK(fs.at(9).substitute(sub) ==
          P("b3^3+3*b2^2*b5+6*b2*b3*b4+2*i*a1^2*(c7-2*i*a3*a4-2*i*a2*a5-2*i*a1*a6)"
            "+4*i*a1*a2*(c6-i*a3^2-2*i*a2*a4-2*i*a1*a5)"
            "+(c4+i*a2^2+2*i*a1*a3)*(c5-2*i*a2*a3-2*i*a1*a4)"
            "+(c5+2*i*a2*a3+2*i*a1*a4)*(c4-i*a2^2-2*i*a1*a3)"));
    CHECK(fs.at(10).substitute(sub) ==
          P("3*b2^2*b6+3*b3^2*b4+3*b4^2*b2+6*b2*b3*b5"
            "+2*i*a1^2*(c8-i*a4^2-2*i*a3*a5-2*i*a2*a6-2*i*a1*a7)"
            "+4*i*a1*a2*(c7-2*i*a3*a4-2*i*a2*a5-2*i*a1*a6)"
            "+(c4+i*a2^2+2*i*a1*a3)*(c6-i*a3^2-2*i*a2*a4-2*i*a1*a5)"
            "+(c5+2*i*a2*a3+2*i*a1*a4)*(c5-2*i*a2*a3-2*i*a1*a4)"
            "+(c6+i*a3^2+2*i*a2*a4+2*i*a1*a5)*(c4-i*a2^2-2*i*a1*a3)"));
    CHECK(fs.at(11).substitute(sub) ==
          P("3*b2^2*b7+6*b2*b3*b6+6*b2*b4*b5+3*b3*b4^2+3*b3^2*b5"
            "+2*i*a1^2*(c9-2*i*a4*a5-2*i*a3*a6-2*i*a2*a7-2*i*a1*a8)"
            "+4*i*a1*a2*(c8-i*a4^2-2*i*a3*a5-2*i*a2*a6-2*i*a1*a7)"
            "+(c4+i*a2^2+2*i*a1*a3)*(c7-2*i*a3*a4-2*i*a2*a5-2*i*a1*a6)"
            "+(c5+2*i*a2*a3+2*i*a1*a4)*(c6-i*a3^2-2*i*a2*a4-2*i*a1*a5)"
            "+(c6+i*a3^2+2*i*a2*a4+2*i*a1*a5)*(c5-2*i*a2*a3-2*i*a1*a4)"
            "+(c7+2*i*a3*a4+2*i*a2*a5+2*i*a1*a6)*(c4-i*a2^2-2*i*a1*a3)"));
}

TEST_CASE("leading form factorization completes i-factors for the even pattern") {
    LeadingFactorization f1 = factor_leading_form(P("c2^2+a1^4"));
    REQUIRE(f1.split);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].factor == P("c2+i*a1^2"));
    CHECK(f1.factors[1].factor == P("c2-i*a1^2"));
    CHECK(verify_claimed_factorization(P("c2^2+a1^4"), f1.factors));

    LeadingFactorization f4 = factor_leading_form(P("c4^2+a2^4"));
    REQUIRE(f4.split);
    CHECK(f4.factors[0].factor == P("c4+i*a2^2"));
    CHECK(f4.factors[1].factor == P("c4-i*a2^2"));

    LeadingFactorization quad = factor_leading_form(P("y^2+x^2"));
    REQUIRE(quad.split);
    CHECK(quad.factors[0].factor == P("y+i*x"));
    CHECK(quad.factors[1].factor == P("y-i*x"));

    LeadingFactorization odd = factor_leading_form(P("c3^2+b2^3"));
    CHECK(!odd.split);
    REQUIRE(odd.factors.size() == 1);
    CHECK(odd.factors[0].factor == P("c3^2+b2^3"));

    CHECK(!factor_leading_form(P("c6^2+b4^3+a3^4")).split);
    CHECK(!factor_leading_form(P("2*c2^2+2*a1^4")).split);
    CHECK(!factor_leading_form(P("c2^2+a1^3")).split);
    CHECK(!factor_leading_form(P("c2^2+c2^4")).split);
    CHECK_THROWS_AS(factor_leading_form(Polynomial::zero()), zero_polynomial_error);

    CHECK(verify_claimed_factorization(P("c2^2+a1^4"),
                                       {{P("c2+i*a1^2"), 1}, {P("c2-i*a1^2"), 1}}));
    CHECK(!verify_claimed_factorization(P("c3^2+b2^3"), {{P("c3+i*b2"), 1}, {P("c3-i*b2"), 1}}));
    CHECK(verify_claimed_factorization(P("c2^2+2*c2*a1^2+a1^4"), {{P("c2+a1^2"), 2}}));
}

TEST_CASE("the jet recursion holds on every divisor family") {
    for (const DivisorRecord* d : {&e1_record(), &e2_record(), &e4_record(), &e6_record()}) {
        FamilySystem fs = reduce_to_family(jets12(), *d);
        CHECK(verify_recursion(fs));
    }
    FamilySystem small = reduce_to_family(jets8(), e2_record());
    CHECK(verify_recursion(small));

    FamilySystem corrupted = reduce_to_family(jets12(), e4_record());
    corrupted.reduced[1].f += P("c6^2");
    CHECK(!verify_recursion(corrupted));
}

TEST_CASE("wedge expansion with constant series reproduces the family equations") {
    FamilySystem fs = reduce_to_family(jets8(), e4_record());
    WedgeExpansion we = expand_wedge(fs, {}, 3);
    CHECK(we.at(8, 0) == fs.at(8));
    CHECK(we.at(8, 1).is_zero());
    CHECK(we.at(8, 2).is_zero());
    CHECK(we.at(8, 3).is_zero());
    CHECK_THROWS_AS(we.at(8, 4), error);
    CHECK_THROWS_AS(we.at(9, 0), error);
}

TEST_CASE("normalized series shift coefficients by monomial powers") {
    FamilySystem fs = reduce_to_family(jets8(), e2_record());
    std::map<VariableId, SeriesSpec> series{{jet_variable(Family::a, 1), SeriesSpec{1, true}}};
    WedgeExpansion we = expand_wedge(fs, series, 6);

    CHECK(we.at(4, 0) == P("c2^2"));
    CHECK(we.at(4, 1).is_zero());
    CHECK(we.at(4, 2).is_zero());
    CHECK(we.at(4, 3).is_zero());
    CHECK(we.at(4, 4) == P("1"));
    CHECK(we.at(5, 0) == P("2*c2*c3"));
    CHECK(we.at(5, 3) == P("4*a2"));
}

TEST_CASE("wedge extraction at concrete witness weights") {
    FamilySystem fs = reduce_to_family(jets8(), e1_record());
    std::map<VariableId, SeriesSpec> series{{jet_variable(Family::b, 2), SeriesSpec{2, false}},
                                            {jet_variable(Family::c, 3), SeriesSpec{3, false}}};
    WedgeExpansion we = expand_wedge(fs, series, 8);

    for (std::uint64_t v = 0; v < 6; ++v) CHECK(we.at(6, v).is_zero());
    CHECK(we.at(6, 6) == P("c3_3^2+b2_2^3"));

    ThetaExtraction tie = extract_g_theta(we, 6, {});
    CHECK(tie.theta == 6);
    CHECK(tie.g == P("c3_3^2+b2_2^3"));

    ThetaExtraction mono = extract_g_theta(we, 7, {});
    CHECK(mono.theta == 3);
    CHECK(mono.g == P("2*c4*c3_3"));

    ThetaExtraction source = extract_g_theta(we, 8, {});
    CHECK(source.theta == 0);
    CHECK(source.g == P("c4^2+a2^4"));
}

TEST_CASE("declaring low series coefficients zero matches starting the series higher") {
    FamilySystem fs = reduce_to_family(jets8(), e1_record());
    std::map<VariableId, SeriesSpec> low{{jet_variable(Family::b, 2), SeriesSpec{1, false}},
                                         {jet_variable(Family::c, 3), SeriesSpec{1, false}}};
    WedgeExpansion we = expand_wedge(fs, low, 8);
    std::vector<VariableId> declared_zero{wedge_variable(Family::b, 2, 1),
                                          wedge_variable(Family::c, 3, 1),
                                          wedge_variable(Family::c, 3, 2)};

    ThetaExtraction tie = extract_g_theta(we, 6, declared_zero);
    CHECK(tie.theta == 6);
    CHECK(tie.g == P("c3_3^2+b2_2^3"));

    ThetaExtraction mono = extract_g_theta(we, 7, declared_zero);
    CHECK(mono.theta == 3);
    CHECK(mono.g == P("2*c4*c3_3"));
}

TEST_CASE("extraction reports an exhausted expansion depth") {
    FamilySystem fs = reduce_to_family(jets8(), e1_record());
    std::map<VariableId, SeriesSpec> series{{jet_variable(Family::b, 2), SeriesSpec{5, false}},
                                            {jet_variable(Family::c, 3), SeriesSpec{5, false}}};
    WedgeExpansion we = expand_wedge(fs, series, 4);
    CHECK_THROWS_AS(extract_g_theta(we, 6, {}), budget_exceeded);
}

TEST_CASE("wedge coefficients agree with direct substitution at random points") {
    FamilySystem fs = reduce_to_family(jets8(), e1_record());
    const std::uint64_t depth = 6;
    std::map<VariableId, SeriesSpec> series{{jet_variable(Family::b, 2), SeriesSpec{2, false}},
                                            {jet_variable(Family::c, 3), SeriesSpec{3, false}}};
    WedgeExpansion we = expand_wedge(fs, series, depth);

    std::mt19937_64 rng(424243);
    for (int trial = 0; trial < 8; ++trial) {
        std::map<VariableId, GaussianRational> values;
        std::map<VariableId, Polynomial> as_series;
        for (const FamilyEquation& fe : fs.reduced) {
            for (VariableId v : fe.f.variables()) {
                auto spec = series.find(v);
                if (spec == series.end()) {
                    if (!values.count(v)) values[v] = random_value(rng);
                    as_series[v] = Polynomial::constant(values[v]);
                    continue;
                }
                Polynomial tail;
                for (std::uint64_t q = spec->second.start; q <= depth; ++q) {
                    VariableId wedge = wedge_variable(v.family(), v.primary(),
                                                      static_cast<std::uint32_t>(q));
                    if (!values.count(wedge)) values[wedge] = random_value(rng);
                    tail += Polynomial::from_monomial(
                        Monomial::variable(var_s(), static_cast<std::uint32_t>(q)), values[wedge]);
                }
                as_series[v] = tail;
            }
        }
        for (const FamilyEquation& fe : fs.reduced) {
            Polynomial direct = fe.f.substitute(as_series);
            for (std::uint64_t v = 0; v <= depth; ++v) {
                CHECK(we.at(fe.u, v).evaluate(values) == pure_s_coefficient(direct, v));
            }
        }
    }
}
