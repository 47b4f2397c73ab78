#include "jetspace/fixture.hpp"

#include <algorithm>
#include <fstream>

#include "jetspace/errors.hpp"
#include "jetspace/parser.hpp"

namespace jetspace {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw fixture_error(message); }

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing key: ") + key);
    return *it;
}

std::string text_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) fail(std::string("expected a string at: ") + key);
    return v.get<std::string>();
}

std::uint64_t uint_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_number_unsigned()) fail(std::string("expected a nonnegative integer at: ") + key);
    return v.get<std::uint64_t>();
}

bool bool_field(const json& obj, const char* key, bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) fail(std::string("expected a boolean at: ") + key);
    return it->get<bool>();
}

const json* optional_array(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return nullptr;
    if (!it->is_array()) fail(std::string("expected an array at: ") + key);
    return &*it;
}

Rational real_constant(const json& v, const char* key) {
    if (!v.is_string()) fail(std::string("expected a constant string at: ") + key);
    GaussianRational c = parse_constant(v.get<std::string>());
    if (!c.is_real()) fail(std::string("expected a real constant at: ") + key);
    return c.re;
}

std::vector<Polynomial> polynomial_list(const json& obj, const char* key) {
    std::vector<Polynomial> out;
    if (const json* arr = optional_array(obj, key))
        for (const json& v : *arr) {
            if (!v.is_string()) fail(std::string("expected polynomial strings at: ") + key);
            out.push_back(parse_polynomial(v.get<std::string>()));
        }
    return out;
}

std::vector<VariableId> variable_list(const json& obj, const char* key) {
    std::vector<VariableId> out;
    if (const json* arr = optional_array(obj, key))
        for (const json& v : *arr) {
            if (!v.is_string()) fail(std::string("expected variable strings at: ") + key);
            out.push_back(parse_variable(v.get<std::string>()));
        }
    return out;
}

std::vector<std::uint64_t> row_list(const json& obj, const char* key) {
    std::vector<std::uint64_t> out;
    if (const json* arr = optional_array(obj, key))
        for (const json& v : *arr) {
            if (!v.is_number_unsigned()) fail(std::string("expected row numbers at: ") + key);
            out.push_back(v.get<std::uint64_t>());
        }
    return out;
}

Relation parse_relation(const std::string& text) {
    if (text == "eq") return Relation::eq;
    if (text == "ge") return Relation::ge;
    if (text == "gt") return Relation::gt;
    fail("unknown relation: " + text);
}

WeightConstraint parse_constraint(const json& obj) {
    if (!obj.is_object()) fail("expected a constraint object");
    WeightConstraint c;
    c.rel = parse_relation(text_field(obj, "rel"));
    const json& coeffs = field(obj, "coeffs");
    if (!coeffs.is_array()) fail("expected an array at: coeffs");
    for (const json& v : coeffs) c.form.coeffs.push_back(real_constant(v, "coeffs"));
    if (auto it = obj.find("constant"); it != obj.end()) c.form.constant = real_constant(*it, "constant");
    return c;
}

std::vector<WeightConstraint> constraint_list(const json& obj, const char* key) {
    std::vector<WeightConstraint> out;
    if (const json* arr = optional_array(obj, key))
        for (const json& v : *arr) out.push_back(parse_constraint(v));
    return out;
}

BranchExpectation parse_expectation(const std::string& text) {
    if (text == "none") return BranchExpectation::none;
    if (text == "unsat") return BranchExpectation::unsat;
    if (text == "monomial") return BranchExpectation::monomial;
    fail("unknown expectation: " + text);
}

CaseBranch parse_branch(const json& obj) {
    CaseBranch b;
    b.name = text_field(obj, "name");
    b.constraints = constraint_list(obj, "constraints");
    if (const json* arr = optional_array(obj, "forced_weights"))
        for (const json& v : *arr) b.forced_weights.push_back(real_constant(v, "forced_weights"));
    b.normalized = variable_list(obj, "normalized");
    b.declared_zero = variable_list(obj, "declared_zero");
    b.system_rows = row_list(obj, "system_rows");
    b.extract_next_rows = row_list(obj, "extract_next_rows");
    b.extra_system = polynomial_list(obj, "extra_system");
    b.extra_nonzero = polynomial_list(obj, "extra_nonzero");
    if (auto it = obj.find("specialization"); it != obj.end()) {
        b.specialization.relations = polynomial_list(*it, "relations");
        b.specialization.exclusions = polynomial_list(*it, "exclusions");
    }
    b.unpinned = variable_list(obj, "unpinned");
    b.include_source_relations = bool_field(obj, "include_source_relations", true);
    b.use_leading_system = bool_field(obj, "use_leading_system", true);
    if (auto it = obj.find("depth"); it != obj.end()) b.depth = uint_field(obj, "depth");
    if (auto it = obj.find("expect"); it != obj.end())
        b.expect = parse_expectation(it->get<std::string>());
    if (auto it = obj.find("monomial_row"); it != obj.end())
        b.monomial_row = uint_field(obj, "monomial_row");
    return b;
}

CaseFixture parse_case(const json& obj) {
    CaseFixture cf;
    cf.source = text_field(obj, "source");
    cf.target = text_field(obj, "target");
    cf.k = uint_field(obj, "k");
    cf.use_target_branch = bool_field(obj, "target_branch", false);
    cf.use_source_factor = bool_field(obj, "source_factor", false);
    if (auto it = obj.find("audit_budget"); it != obj.end())
        cf.audit_budget = uint_field(obj, "audit_budget");
    if (const json* arr = optional_array(obj, "audit_contexts"))
        for (const json& ctx : *arr) {
            if (!ctx.is_array()) fail("expected constraint arrays at: audit_contexts");
            std::vector<WeightConstraint> one;
            for (const json& v : ctx) one.push_back(parse_constraint(v));
            cf.audit_contexts.push_back(std::move(one));
        }
    cf.script.name = cf.source + "-" + cf.target;
    const json& branches = field(obj, "branches");
    if (!branches.is_array()) fail("expected an array at: branches");
    for (const json& b : branches) cf.script.branches.push_back(parse_branch(b));
    return cf;
}

DivisorFixture parse_divisor(const json& obj, const std::vector<std::string>& columns) {
    DivisorFixture d;
    d.record.name = text_field(obj, "name");
    const json& orders = field(obj, "orders");
    if (!orders.is_array() || orders.size() != columns.size())
        fail("orders of " + d.record.name + " must match the column list");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const json& v = orders[i];
        if (!v.is_number_unsigned()) fail("expected order numbers for " + d.record.name);
        d.record.test_orders[columns[i]] = v.get<std::uint64_t>();
    }
    d.record.mu = {d.record.test_orders.at("x"), d.record.test_orders.at("y"),
                   d.record.test_orders.at("z")};
    if (auto it = obj.find("branch"); it != obj.end()) {
        d.branch_column = text_field(*it, "column");
        if (std::find(columns.begin(), columns.end(), *d.branch_column) == columns.end())
            fail("branch column of " + d.record.name + " is not a test function");
        d.branch_factor = parse_polynomial(text_field(*it, "factor"));
    }
    if (auto it = obj.find("witness"); it != obj.end()) {
        if (!it->is_object()) fail("expected an object at: witness");
        for (const auto& [var_text, value] : it->items())
            d.witness[parse_variable(var_text)] = parse_constant(value.get<std::string>());
    }
    return d;
}

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::unsat: return "unsat";
        case Verdict::sat: return "sat";
        default: return "inconclusive";
    }
}

Verdict parse_verdict(const std::string& text) {
    if (text == "unsat") return Verdict::unsat;
    if (text == "sat") return Verdict::sat;
    if (text == "inconclusive") return Verdict::inconclusive;
    fail("unknown verdict: " + text);
}

std::string closure_text(BranchClosure c) {
    switch (c) {
        case BranchClosure::pinned_monomial: return "pinned-monomial";
        case BranchClosure::refuted: return "refuted";
        default: return "open";
    }
}

json polynomial_texts(const std::vector<Polynomial>& polys) {
    json out = json::array();
    for (const Polynomial& p : polys) out.push_back(p.to_string());
    return out;
}

std::vector<Polynomial> parse_polynomials(const json& arr, const char* key) {
    if (!arr.is_array()) fail(std::string("expected an array at: ") + key);
    std::vector<Polynomial> out;
    for (const json& v : arr) {
        if (!v.is_string()) fail(std::string("expected polynomial strings at: ") + key);
        out.push_back(parse_polynomial(v.get<std::string>()));
    }
    return out;
}

json refutation_json(const RefutationCertificate& cert) {
    json out;
    out["system"] = polynomial_texts(cert.system);
    out["nonzero"] = polynomial_texts(cert.nonzero);
    out["verdict"] = verdict_text(cert.verdict);
    out["saturating_product"] = cert.saturating_product.to_string();
    out["exponent_bound"] = cert.exponent_bound;
    out["saturated_basis"] = polynomial_texts(cert.saturated_basis);
    json witness = json::object();
    for (const auto& [var, value] : cert.witness) witness[var.to_string()] = gq_to_string(value);
    out["witness"] = witness;
    out["grid_checked"] = cert.grid_checked;
    return out;
}

RefutationCertificate parse_refutation(const json& obj) {
    RefutationCertificate cert;
    cert.system = parse_polynomials(field(obj, "system"), "system");
    cert.nonzero = parse_polynomials(field(obj, "nonzero"), "nonzero");
    cert.verdict = parse_verdict(text_field(obj, "verdict"));
    cert.saturating_product = parse_polynomial(text_field(obj, "saturating_product"));
    cert.exponent_bound = uint_field(obj, "exponent_bound");
    cert.saturated_basis = parse_polynomials(field(obj, "saturated_basis"), "saturated_basis");
    const json& witness = field(obj, "witness");
    if (!witness.is_object()) fail("expected an object at: witness");
    for (const auto& [var_text, value] : witness.items())
        cert.witness[parse_variable(var_text)] = parse_constant(value.get<std::string>());
    cert.grid_checked = uint_field(obj, "grid_checked");
    return cert;
}

CertificateCheck check_case_certificate(const json& doc) {
    CertificateCheck out;
    const json& branches = field(doc, "branches");
    if (!branches.is_array()) fail("expected an array at: branches");
    bool all_closed = !branches.empty();
    for (const json& b : branches) {
        std::string branch_name = text_field(b, "name");
        std::string closure = text_field(b, "closure");
        if (!bool_field(b, "expectation_met", true)) all_closed = false;
        if (closure == "open") {
            all_closed = false;
            continue;
        }
        if (closure == "pinned-monomial") {
            Polynomial g = parse_polynomial(text_field(b, "contradiction_g"));
            if (g.is_zero() || g.terms().size() != 1) {
                out.note = "branch " + branch_name + " stores no pinned monomial";
                return out;
            }
            continue;
        }
        if (closure != "refuted") fail("unknown closure: " + closure);
        auto it = b.find("refutation");
        if (it == b.end() || it->is_null()) {
            out.note = "branch " + branch_name + " stores no refutation";
            return out;
        }
        RefutationCertificate cert = parse_refutation(*it);
        if (cert.verdict != Verdict::unsat) {
            out.note = "branch " + branch_name + " closure disagrees with its verdict";
            return out;
        }
        if (!revalidate(cert)) {
            out.note = "branch " + branch_name + " refutation does not recompute";
            return out;
        }
    }
    out.valid = true;
    bool stored = field(doc, "certified").get<bool>();
    if (stored && !all_closed) {
        out.valid = false;
        out.note = "certified flag disagrees with the stored branches";
        return out;
    }
    out.certified = stored;
    return out;
}

}  // namespace

VariableId parse_variable(const std::string& text) {
    Polynomial p = parse_polynomial(text);
    if (p.terms().size() == 1 && p.terms().front().coeff == GaussianRational(1)) {
        const Monomial& m = p.terms().front().mono;
        if (m.factors.size() == 1 && m.factors.front().second == 1) return m.factors.front().first;
    }
    fail("expected a single variable: " + text);
}

const DivisorFixture& SurfaceFixture::divisor(const std::string& divisor_name) const {
    for (const DivisorFixture& d : divisors)
        if (d.record.name == divisor_name) return d;
    fail("unknown divisor: " + divisor_name);
}

const CaseFixture* SurfaceFixture::find_case(const std::string& source,
                                             const std::string& target) const {
    for (const CaseFixture& c : cases)
        if (c.source == source && c.target == target) return &c;
    return nullptr;
}

OrderTable SurfaceFixture::order_table() const {
    std::vector<DivisorRecord> records;
    for (const DivisorFixture& d : divisors) records.push_back(d.record);
    return make_order_table(columns, std::move(records), symmetries);
}

SurfaceFixture parse_fixture(const json& doc) {
    if (!doc.is_object()) fail("expected a fixture object");
    if (uint_field(doc, "schema") != 1) fail("unsupported schema version");
    SurfaceFixture fx{text_field(doc, "name"), SurfaceEquation(parse_polynomial(text_field(doc, "surface"))),
                      {}, {}, {}, {}, {}};
    const json& columns = field(doc, "columns");
    if (!columns.is_array()) fail("expected an array at: columns");
    for (const json& c : columns) {
        if (!c.is_string()) fail("expected column name strings");
        fx.columns.push_back(c.get<std::string>());
    }
    if (fx.columns.size() < 3 || fx.columns[0] != "x" || fx.columns[1] != "y" || fx.columns[2] != "z")
        fail("columns must start with x, y, z");
    const json& divisors = field(doc, "divisors");
    if (!divisors.is_array()) fail("expected an array at: divisors");
    for (const json& d : divisors) fx.divisors.push_back(parse_divisor(d, fx.columns));
    if (const json* arr = optional_array(doc, "symmetries"))
        for (const json& s : *arr) {
            if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string())
                fail("expected divisor name pairs at: symmetries");
            fx.symmetries.emplace_back(s[0].get<std::string>(), s[1].get<std::string>());
        }
    if (const json* rows = optional_array(doc, "intersection_matrix"))
        for (const json& row : *rows) {
            if (!row.is_array()) fail("expected rows at: intersection_matrix");
            std::vector<std::int64_t> entries;
            for (const json& v : row) {
                if (!v.is_number_integer()) fail("expected integer intersection numbers");
                entries.push_back(v.get<std::int64_t>());
            }
            fx.matrix.entries.push_back(std::move(entries));
        }
    if (const json* arr = optional_array(doc, "cases"))
        for (const json& c : *arr) fx.cases.push_back(parse_case(c));
    fx.order_table();  // validates completeness and symmetry names
    for (const CaseFixture& cf : fx.cases) {
        fx.divisor(cf.source);
        fx.divisor(cf.target);
    }
    return fx;
}

SurfaceFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open fixture: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail("invalid fixture JSON: " + std::string(e.what()));
    }
    return parse_fixture(doc);
}

std::vector<Polynomial> family_relations(const SurfaceFixture& fx, const std::string& divisor_name,
                                         std::uint64_t k, bool use_branch) {
    const DivisorFixture& d = fx.divisor(divisor_name);
    FamilySystem fs = reduce_to_family(expand_jet(fx.surface, k), d.record);
    std::vector<Polynomial> out;
    if (use_branch && d.branch_factor) {
        IdealHandle factor = buchberger({*d.branch_factor});
        for (const FamilyEquation& eq : fs.reduced) out.push_back(normal_form(eq.f, factor));
    } else {
        for (const FamilyEquation& eq : fs.reduced) out.push_back(eq.f);
    }
    return out;
}

WedgeProblem make_case_problem(const SurfaceFixture& fx, const CaseFixture& cf) {
    const DivisorFixture& src = fx.divisor(cf.source);
    const DivisorFixture& tgt = fx.divisor(cf.target);
    std::optional<TargetBranch> branch;
    if (cf.use_target_branch) {
        if (!tgt.branch_column) fail("target " + cf.target + " declares no branch");
        branch = TargetBranch{*tgt.branch_column, parse_polynomial(*tgt.branch_column)};
    }
    std::optional<Polynomial> factor;
    if (cf.use_source_factor) {
        if (!src.branch_factor) fail("source " + cf.source + " declares no branch factor");
        factor = src.branch_factor;
    }
    WedgeProblem problem =
        make_wedge_problem(fx.surface, src.record, tgt.record, cf.k, branch, factor);
    std::size_t width = problem.symbol_vars.size();
    for (const CaseBranch& b : cf.script.branches)
        for (const WeightConstraint& c : b.constraints)
            if (c.form.coeffs.size() != width)
                fail("constraint width mismatch in branch " + b.name);
    for (const auto& ctx : cf.audit_contexts)
        for (const WeightConstraint& c : ctx)
            if (c.form.coeffs.size() != width) fail("constraint width mismatch in audit context");
    return problem;
}

json wedge_certificate(const SurfaceFixture& fx, const CaseFixture& cf, const CaseReport& report) {
    json out;
    out["schema"] = 1;
    out["kind"] = "wedge-certificate";
    out["fixture"] = fx.name;
    out["source"] = cf.source;
    out["target"] = cf.target;
    out["k"] = cf.k;
    out["certified"] = report.certified;
    json branches = json::array();
    for (const BranchOutcome& b : report.branches) {
        json entry;
        entry["name"] = b.name;
        entry["closure"] = closure_text(b.closure);
        if (!b.note.empty()) entry["note"] = b.note;
        if (b.closure == BranchClosure::pinned_monomial) {
            entry["contradiction_row"] = b.contradiction_row;
            entry["contradiction_g"] = b.contradiction_g.to_string();
        }
        entry["weights_used"] = b.weights_used;
        entry["expectation_met"] = b.expectation_met;
        entry["refutation"] = b.certificate ? refutation_json(*b.certificate) : json();
        branches.push_back(std::move(entry));
    }
    out["branches"] = std::move(branches);
    return out;
}

CertificateCheck check_certificate(const json& doc) {
    if (!doc.is_object()) fail("expected a certificate object");
    if (uint_field(doc, "schema") != 1) fail("unsupported schema version");
    std::string kind = text_field(doc, "kind");
    if (kind == "wedge-certificate") return check_case_certificate(doc);
    if (kind != "run-report") fail("unknown certificate kind: " + kind);
    CertificateCheck out;
    bool all_certified = true;
    const json& cases = field(doc, "cases");
    if (!cases.is_array()) fail("expected an array at: cases");
    for (const json& c : cases) {
        CertificateCheck one = check_case_certificate(c);
        if (!one.valid) return one;
        all_certified = all_certified && one.certified;
    }
    std::string status = text_field(doc, "status");
    if (status != "certified" && status != "partial") fail("unknown status: " + status);
    out.valid = true;
    if ((status == "certified") != all_certified) {
        out.valid = false;
        out.note = "status disagrees with the stored cases";
        return out;
    }
    out.certified = all_certified;
    return out;
}

}  // namespace jetspace
