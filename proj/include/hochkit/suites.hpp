#pragma once

#include "hochkit/lie.hpp"

#include <json.hpp>

#include <optional>

namespace hk {

struct SuiteConfig {
    std::optional<LieAlgebra> lie;  // replaces the default algebras of a suite
    int max_arity = 3;              // P
    int pbw = 3;                    // N
    int series_order = 4;           // K
    std::uint64_t seed = 0;
    int trials = 100;
    // Replaces sgn(p, q, r) by −sgn(p, q, r) whenever q is odd, for replaying an injected failure.
    bool mutate_sign = false;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    CheckResult(std::string n = {}, CheckStatus s = CheckStatus::pass, int c = 0, std::string w = {})
        : name(std::move(n)), status(s), cases(c), witness(std::move(w)) {}

    std::string name;
    CheckStatus status = CheckStatus::pass;
    int cases = 0;
    std::string witness;  // first failing input, or the reason for skipping

    void fail(const std::string& where);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    nlohmann::json tables = nlohmann::json::object();
    double seconds = 0;
    bool ok() const;
};

// Suite names in canonical order; suite i + 1 covers acceptance criterion i + 1.
const std::vector<std::string>& suite_names();
// Throws ContractError for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::string status_name(CheckStatus s);
CheckStatus parse_status(const std::string& s);
nlohmann::json to_json(const SuiteReport& r);
SuiteReport report_from_json(const nlohmann::json& j);
std::string to_text(const SuiteReport& r);

}  // namespace hk
