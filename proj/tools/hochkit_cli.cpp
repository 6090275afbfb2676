#include "hochkit/duflo.hpp"
#include "hochkit/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace hk;
using nlohmann::json;

namespace {

// A path to a Lie-algebra JSON file, or one of the built-in names.
LieAlgebra resolve_lie(const std::string& spec) {
    if (std::filesystem::exists(spec)) return LieAlgebra::load(spec);
    if (spec == "sl2") return LieAlgebra::sl2();
    if (spec == "aff1") return LieAlgebra::aff1();
    if (spec == "heisenberg") return LieAlgebra::heisenberg();
    if (spec.rfind("abelian", 0) == 0 && spec.size() > 7) return LieAlgebra::abelian(std::stoi(spec.substr(7)));
    throw ContractError("no such file or built-in Lie algebra: " + spec);
}

LieAlgebra checked_lie(const std::string& spec) {
    LieAlgebra g = resolve_lie(spec);
    auto rep = g.validate();
    if (!rep.ok) throw ContractError(g.name() + ": " + rep.describe());
    return g;
}

// Terms sorted by polynomial degree, then by monomial.
std::vector<std::pair<Key, Q>> graded_terms(const Series& s) {
    std::vector<std::pair<Key, Q>> terms(s.begin(), s.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    return terms;
}

std::string series_string(const Series& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : graded_terms(s)) {
        os << (first ? "" : " + ") << q_string(c);
        for (int i : k) os << "*x" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

json series_json(const Series& s) {
    json out = json::array();
    for (const auto& [k, c] : graded_terms(s)) out.push_back({{"monomial", k}, {"coeff", q_string(c)}});
    return out;
}

void print_dims(const std::string& title, const std::vector<int>& dims, int first_degree, bool as_json, json extra = {}) {
    if (as_json) {
        json j = extra.is_null() ? json::object() : extra;
        j["degrees"] = json::array();
        for (std::size_t i = 0; i < dims.size(); ++i) j["degrees"].push_back(first_degree + static_cast<int>(i));
        j["dims"] = dims;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << title << "\n";
    for (std::size_t i = 0; i < dims.size(); ++i)
        std::cout << "  degree " << first_degree + static_cast<int>(i) << ": " << dims[i] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hochkit: exact Hochschild, Keller-triple and Duflo computations"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string lie_spec;
    bool as_json = false;
    auto common = [&](CLI::App* c, bool windows) {
        c->add_option("--lie", lie_spec, "Lie algebra JSON path or built-in name (sl2, aff1, heisenberg, abelianN)");
        c->add_flag("--json", as_json, "machine-readable output");
        if (!windows) return;
        c->add_option("--max-arity", cfg.max_arity, "arity window P")->check(CLI::PositiveNumber);
        c->add_option("--pbw", cfg.pbw, "PBW window N")->check(CLI::PositiveNumber);
        c->add_option("--series-order", cfg.series_order, "series order K")->check(CLI::PositiveNumber);
        c->add_option("--seed", cfg.seed, "seed");
        c->add_option("--trials", cfg.trials, "trials per property")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "load a Lie algebra and check antisymmetry and Jacobi");
    common(validate, false);
    validate->get_option("--lie")->required();

    std::string suite;
    auto* run = app.add_subcommand("run", "run a verification suite, or all of them");
    common(run, true);
    std::string names = "all";
    for (const auto& n : suite_names()) names += ", " + n;
    run->add_option("suite", suite, "one of: " + names)->required();
    run->add_flag("--mutate-sign", cfg.mutate_sign, "inject a wrong sgn(p,q,r) into the homotopy identity");

    auto* cohom = app.add_subcommand("cohomology", "cohomology dimension tables");
    auto* ce = cohom->add_subcommand("ce", "Chevalley–Eilenberg cohomology");
    cohom->require_subcommand(1);
    common(ce, true);
    std::string coeff = "trivial";
    ce->add_option("--coeff", coeff, "coefficients")->check(CLI::IsMember({"trivial", "sg", "ug"}));

    auto* duflo = app.add_subcommand("duflo", "Duflo series");
    auto* series = duflo->add_subcommand("series", "coefficients of log J, J and J^{1/2}");
    duflo->require_subcommand(1);
    common(series, false);
    series->add_option("--order", cfg.series_order, "series order")->check(CLI::PositiveNumber);

    auto* hh = app.add_subcommand("hh", "interior Hochschild cohomology of a finite-dimensional algebra");
    common(hh, false);
    std::string algebra = "dual-odd";
    int window = 4;
    std::vector<int> degrees{0, 1, 2};
    hh->add_option("--algebra", algebra, "dual-odd: S(g[1])∨ with d_g; dual-numbers: k[x]/(x²), |x| = 1")
        ->check(CLI::IsMember({"dual-odd", "dual-numbers"}));
    hh->add_option("--window", window, "arity window P")->check(CLI::PositiveNumber);
    hh->add_option("--degrees", degrees, "total degrees")->delimiter(',');

    auto* thb = app.add_subcommand("theorem-b", "the Duflo comparison for a Lie algebra");
    common(thb, true);
    cfg.pbw = 3;

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            LieAlgebra g = resolve_lie(lie_spec);
            auto rep = g.validate();
            if (as_json) {
                json v = json::array();
                for (const auto& t : rep.violations) v.push_back(t);
                std::cout << json{{"name", g.name()}, {"dimension", g.dim()}, {"ok", rep.ok}, {"violations", v}}.dump(2)
                          << "\n";
            } else {
                std::cout << g.name() << ": dimension " << g.dim() << ", " << (rep.ok ? "pass" : rep.describe()) << "\n";
            }
            return rep.ok ? 0 : 1;
        }
        if (!lie_spec.empty()) cfg.lie = checked_lie(lie_spec);

        if (*run) {
            std::vector<std::string> todo;
            if (suite == "all")
                todo = suite_names();
            else
                todo = {suite};
            bool ok = true;
            json all = json::array();
            for (const auto& name : todo) {
                SuiteReport rep = run_suite(name, cfg);
                ok = ok && rep.ok();
                if (as_json)
                    all.push_back(to_json(rep));
                else
                    std::cout << to_text(rep) << std::flush;
            }
            if (as_json) std::cout << (todo.size() == 1 ? all.front() : all).dump(2) << "\n";
            return ok ? 0 : 1;
        }

        LieAlgebra g = cfg.lie ? *cfg.lie : LieAlgebra::sl2();
        if (*ce) {
            auto dims = ce_cohomology(coeff, g, cfg.pbw);
            print_dims("H_CE(" + g.name() + ", " + coeff + ")", dims, 0, as_json,
                       json{{"lie", g.name()}, {"coeff", coeff}, {"window", cfg.pbw}});
            return 0;
        }
        if (*series) {
            auto s = duflo_series(g, cfg.series_order);
            if (as_json) {
                std::cout << json{{"lie", g.name()}, {"order", cfg.series_order}, {"log_j", series_json(s.log_j)},
                                  {"j", series_json(s.j)}, {"j_sqrt", series_json(s.j_sqrt)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "Duflo series of " << g.name() << " to order " << cfg.series_order << "\n"
                          << "  log J   = " << series_string(s.log_j) << "\n"
                          << "  J       = " << series_string(s.j) << "\n"
                          << "  J^(1/2) = " << series_string(s.j_sqrt) << "\n";
            }
            return 0;
        }
        if (*hh) {
            std::shared_ptr<Algebra> a;
            std::string label;
            if (algebra == "dual-numbers") {
                a = std::make_shared<DualNumbers>(1);
                label = "k[x]/(x^2)";
            } else {
                LieAlgebra h = cfg.lie ? *cfg.lie : LieAlgebra::abelian(1);
                a = std::make_shared<DualOdd>(h);
                label = "S(" + h.name() + "[1])^v";
            }
            auto t = hoch_cohomology(*a, window, degrees);
            std::vector<int> dims;
            for (int d : degrees) dims.push_back(t.dimension[d]);
            if (as_json) {
                std::cout << json{{"algebra", label}, {"window", window}, {"degrees", degrees}, {"dims", dims}}.dump(2) << "\n";
            } else {
                std::cout << "interior HH of " << label << " with arity window " << window << "\n";
                for (std::size_t i = 0; i < degrees.size(); ++i)
                    std::cout << "  degree " << degrees[i] << ": " << dims[i] << "\n";
            }
            return 0;
        }
        if (*thb) {
            if (cfg.pbw < 4) cfg.pbw = 4;
            SuiteReport rep = run_suite("theorem-b", cfg);
            std::cout << (as_json ? to_json(rep).dump(2) + "\n" : to_text(rep));
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
