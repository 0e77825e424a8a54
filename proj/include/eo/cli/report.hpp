#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eo/parallel/exec.hpp"

namespace eo::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Outcome {
    bool pass;
    nlohmann::json residual;  // "0" for exact zero; term counts or relative errors otherwise
};

struct Check {
    std::string id;
    std::string reference;  // the identity being checked
    std::function<Outcome()> run;
};

struct CheckRecord {
    std::string id;
    std::string reference;
    std::string status;  // pass, fail, skipped
    nlohmann::json residual;
    double seconds = 0;
};

struct Report {
    std::string suite;
    nlohmann::json config;
    std::vector<CheckRecord> records;
    bool pass() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_pretty() const;
};

// Checks run in parallel when exec is parallel; records keep the input order.
// An exception inside a check is recorded as a failure with the message as residual.
Report run_checks(const std::string& suite, const std::vector<Check>& checks, parallel::Exec exec);

}  // namespace eo::cli
