#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <semaphore>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetspace/errors.hpp"
#include "jetspace/fixture.hpp"
#include "jetspace/parser.hpp"

namespace {

using namespace jetspace;
using nlohmann::json;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("JETSPACE_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return GroebnerBudget{}.max_reductions;
}

WedgeBudgets budgets_with(std::uint64_t reductions) {
    WedgeBudgets budgets;
    budgets.groebner.max_reductions = reductions;
    return budgets;
}

std::string divisor_name(std::string token) {
    if (!token.empty() && std::all_of(token.begin(), token.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
        return "E" + token;
    return token;
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
        throw fixture_error("expected --pair J,I with two divisor names");
    return {divisor_name(text.substr(0, comma)), divisor_name(text.substr(comma + 1))};
}

void write_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw fixture_error("cannot write: " + path);
    out << doc.dump(2) << "\n";
}

std::string closure_line(const BranchOutcome& b) {
    switch (b.closure) {
        case BranchClosure::pinned_monomial:
            return "contradiction at row " + std::to_string(b.contradiction_row) + ": " +
                   b.contradiction_g.to_string();
        case BranchClosure::refuted:
            return "refuted by saturation";
        default:
            return "open" + (b.note.empty() ? "" : " (" + b.note + ")");
    }
}

int cmd_jets(const std::string& fixture_path, const std::string& divisor, std::uint64_t k,
             const std::string& out_path) {
    SurfaceFixture fx = load_fixture(fixture_path);
    const DivisorFixture& d = fx.divisor(divisor);
    auto [o, o_k] = contact_orders(fx.surface, d.record, k);
    if (k < o)
        throw fixture_error("k < o_" + divisor + ": the family carries no equations below " +
                            std::to_string(o));
    FamilySystem fs = reduce_to_family(expand_jet(fx.surface, k), d.record);
    for (const FamilyEquation& eq : fs.reduced)
        std::cout << "f_{" << divisor << "," << eq.u << "} = " << eq.f << "\n";
    if (!out_path.empty()) {
        json doc;
        doc["schema"] = 1;
        doc["kind"] = "family";
        doc["divisor"] = divisor;
        doc["k"] = k;
        doc["o"] = fs.o;
        json equations = json::array();
        for (const FamilyEquation& eq : fs.reduced)
            equations.push_back({{"u", eq.u}, {"f", eq.f.to_string()}});
        doc["equations"] = std::move(equations);
        write_json(out_path, doc);
    }
    return 0;
}

int cmd_valuative(const std::string& fixture_path, const std::string& pair_text) {
    SurfaceFixture fx = load_fixture(fixture_path);
    OrderTable table = fx.order_table();
    if (!pair_text.empty()) {
        auto [source, target] = parse_pair(pair_text);
        auto witness = valuative_check(table, source, target);
        if (witness) {
            std::cout << source << " not inside " << target << ": order of " << *witness
                      << " drops\n";
            return 0;
        }
        std::cout << source << " not inside " << target << ": requires wedge\n";
        return 2;
    }
    for (const NonInclusionTask& task : classify_pairs(table)) {
        std::cout << task.source << " not inside " << task.target << ": ";
        if (task.status == NonInclusionStatus::proved_valuative)
            std::cout << "order of " << task.witness << " drops\n";
        else
            std::cout << "requires wedge\n";
    }
    std::cout << "partial order:";
    for (const auto& [lower, upper] : partial_order(table))
        std::cout << " " << lower << "<=" << upper;
    std::cout << "\n";
    ResidualPairs residual = residual_pairs(table);
    std::cout << "residual pairs: " << residual.full.size() << " (" << residual.reduced.size()
              << " modulo symmetry):";
    for (const auto& [source, target] : residual.reduced)
        std::cout << " (" << source << "," << target << ")";
    std::cout << "\n";
    return 0;
}

int cmd_wedge(const std::string& fixture_path, const std::string& pair_text, std::uint64_t budget,
              const std::string& out_path) {
    SurfaceFixture fx = load_fixture(fixture_path);
    auto [source, target] = parse_pair(pair_text);
    const CaseFixture* cf = fx.find_case(source, target);
    if (!cf) throw fixture_error("no case script for (" + source + "," + target + ")");
    WedgeProblem problem = make_case_problem(fx, *cf);
    CaseReport report = run_noninclusion_case(problem, cf->script, budgets_with(budget));
    for (const BranchOutcome& b : report.branches)
        std::cout << "branch " << b.name << ": " << closure_line(b)
                  << (b.expectation_met ? "" : " [expectation unmet]") << "\n";
    std::cout << (report.certified ? "certified" : "open") << "\n";
    if (!out_path.empty()) write_json(out_path, wedge_certificate(fx, *cf, report));
    return report.certified ? 0 : 2;
}

int cmd_run_all(const std::string& fixture_path, std::uint64_t budget, std::uint64_t jobs,
                const std::string& out_path) {
    SurfaceFixture fx = load_fixture(fixture_path);
    OrderTable table = fx.order_table();
    std::vector<NonInclusionTask> tasks = classify_pairs(table);
    std::size_t closed = 0;
    for (const NonInclusionTask& t : tasks)
        if (t.status == NonInclusionStatus::proved_valuative) ++closed;
    ResidualPairs residual = residual_pairs(table);
    std::cout << "valuative: " << tasks.size() << " ordered pairs, " << closed
              << " closed by the order table, " << residual.full.size() << " residual ("
              << residual.reduced.size() << " modulo symmetry)\n";

    struct CaseRun {
        const CaseFixture* cf = nullptr;
        CaseReport report;
        bool scripted = false;
    };
    std::vector<CaseRun> runs(residual.reduced.size());
    for (std::size_t q = 0; q < residual.reduced.size(); ++q) {
        runs[q].cf = fx.find_case(residual.reduced[q].first, residual.reduced[q].second);
        runs[q].scripted = runs[q].cf != nullptr;
    }
    auto run_one = [&](std::size_t q) {
        if (!runs[q].scripted) return;
        WedgeProblem problem = make_case_problem(fx, *runs[q].cf);
        runs[q].report = run_noninclusion_case(problem, runs[q].cf->script, budgets_with(budget));
    };
    if (jobs <= 1) {
        for (std::size_t q = 0; q < runs.size(); ++q) run_one(q);
    } else {
        std::counting_semaphore<64> slots(static_cast<std::ptrdiff_t>(std::min<std::uint64_t>(jobs, 64)));
        std::vector<std::future<void>> futures;
        for (std::size_t q = 0; q < runs.size(); ++q)
            futures.push_back(std::async(std::launch::async, [&, q] {
                slots.acquire();
                run_one(q);
                slots.release();
            }));
        for (auto& f : futures) f.get();
    }

    bool all_certified = true;
    json cases = json::array();
    for (std::size_t q = 0; q < runs.size(); ++q) {
        const auto& [source, target] = residual.reduced[q];
        if (!runs[q].scripted) {
            std::cout << "wedge " << source << "-" << target << ": no case script\n";
            all_certified = false;
            continue;
        }
        std::cout << "wedge " << source << "-" << target << ": "
                  << (runs[q].report.certified ? "certified" : "open") << "\n";
        all_certified = all_certified && runs[q].report.certified;
        cases.push_back(wedge_certificate(fx, *runs[q].cf, runs[q].report));
    }
    std::cout << (all_certified ? "certified" : "partial: residual pairs open") << "\n";
    if (!out_path.empty()) {
        json doc;
        doc["schema"] = 1;
        doc["kind"] = "run-report";
        doc["fixture"] = fx.name;
        json valuative;
        valuative["ordered_pairs"] = tasks.size();
        valuative["closed"] = closed;
        valuative["residual"] = residual.full.size();
        json reduced = json::array();
        for (const auto& [source, target] : residual.reduced)
            reduced.push_back({{"source", source}, {"target", target}});
        valuative["reduced"] = std::move(reduced);
        doc["valuative"] = std::move(valuative);
        doc["cases"] = std::move(cases);
        doc["status"] = all_certified ? "certified" : "partial";
        write_json(out_path, doc);
    }
    return all_certified ? 0 : 2;
}

int cmd_validate(const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) throw fixture_error("cannot open certificate: " + cert_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw fixture_error("invalid certificate JSON: " + std::string(e.what()));
    }
    CertificateCheck check = check_certificate(doc);
    if (!check.valid) {
        std::cout << "invalid: " << check.note << "\n";
        return 1;
    }
    std::cout << (check.certified ? "valid: certified" : "valid: open") << "\n";
    return check.certified ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jet, valuative, and wedge certificates for surface singularities"};
    app.require_subcommand(1);

    std::string fixture_path;
    std::string divisor;
    std::string pair_text;
    std::string out_path;
    std::string cert_path;
    std::uint64_t k = 0;
    std::uint64_t budget = default_budget();
    std::uint64_t jobs = 1;

    CLI::App* jets = app.add_subcommand("jets", "print reduced family equations of one divisor");
    jets->add_option("--fixture", fixture_path)->required();
    jets->add_option("--divisor", divisor)->required();
    jets->add_option("--k", k)->required();
    jets->add_option("--out", out_path);

    CLI::App* valuative = app.add_subcommand("valuative", "order-table stage: witnesses and residual pairs");
    valuative->add_option("--fixture", fixture_path)->required();
    valuative->add_option("--pair", pair_text);

    CLI::App* wedge = app.add_subcommand("wedge", "run the scripted wedge case of one residual pair");
    wedge->add_option("--fixture", fixture_path)->required();
    wedge->add_option("--pair", pair_text)->required();
    wedge->add_option("--budget", budget);
    wedge->add_option("--out", out_path);

    CLI::App* run_all = app.add_subcommand("run-all", "full pipeline: valuative stage plus every scripted case");
    run_all->add_option("--fixture", fixture_path)->required();
    run_all->add_option("--budget", budget);
    run_all->add_option("--jobs", jobs);
    run_all->add_option("--out", out_path);

    CLI::App* validate = app.add_subcommand("validate-cert", "recompute a stored certificate");
    validate->add_option("--cert", cert_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (jets->parsed()) return cmd_jets(fixture_path, divisor, k, out_path);
        if (valuative->parsed()) return cmd_valuative(fixture_path, pair_text);
        if (wedge->parsed()) return cmd_wedge(fixture_path, pair_text, budget, out_path);
        if (run_all->parsed()) return cmd_run_all(fixture_path, budget, jobs, out_path);
        if (validate->parsed()) return cmd_validate(cert_path);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
