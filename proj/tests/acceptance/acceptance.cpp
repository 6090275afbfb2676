#include "hochkit/suites.hpp"

#include <iomanip>
#include <iostream>

using namespace hk;

namespace {

struct Criterion {
    int number;
    std::string suite;
    SuiteConfig cfg;
    double budget_seconds;
};

SuiteConfig config(int max_arity, int pbw, int order, int trials) {
    SuiteConfig c;
    c.max_arity = max_arity;
    c.pbw = pbw;
    c.series_order = order;
    c.trials = trials;
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hochschild-axioms", config(4, 3, 4, 200), 120},
        {2, "trio-complex", config(3, 3, 4, 50), 120},
        {3, "keller-homotopies", config(3, 3, 4, 1), 300},
        {4, "vanishing", config(3, 3, 4, 50), 180},
        {5, "phi-psi-embeddings", config(3, 3, 4, 50), 120},
        {6, "sum-prod-hh", config(5, 3, 4, 1), 60},
        {7, "duflo-maps", config(3, 3, 4, 50), 180},
        {8, "hkr-pbw-homotopy", config(3, 3, 4, 100), 600},
        {9, "theorem-b", config(3, 4, 4, 1), 600},
        {10, "appendix", config(3, 3, 4, 50), 180},
    };
    bool all = true;
    for (const auto& c : criteria) {
        SuiteReport rep;
        std::string error;
        try {
            rep = run_suite(c.suite, c.cfg);
        } catch (const std::exception& e) {
            error = e.what();
        }
        int passed = 0, cases = 0;
        for (const auto& chk : rep.checks) {
            passed += chk.status == CheckStatus::pass;
            cases += chk.cases;
        }
        bool in_time = rep.seconds < c.budget_seconds;
        bool ok = error.empty() && rep.ok() && passed > 0 && in_time;
        all = all && ok;
        std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.suite << ", " << passed << "/"
                  << rep.checks.size() << " checks pass, " << cases << " cases, " << std::fixed << std::setprecision(1)
                  << rep.seconds << " s of " << c.budget_seconds << " s\n";
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        if (!in_time && error.empty()) std::cout << "    over the time budget\n";
        for (const auto& chk : rep.checks)
            if (chk.status != CheckStatus::pass)
                std::cout << "    [" << status_name(chk.status) << "] " << chk.name << ": " << chk.witness << "\n";
        std::cout << std::flush;
    }
    return all ? 0 : 1;
}
