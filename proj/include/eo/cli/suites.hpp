#pragma once

#include <string>
#include <vector>

#include "eo/cli/report.hpp"

namespace eo::cli {

struct SuiteOptions {
    int max_order = 4;
    int max_weight = 6;
    int s_order = 6;
    double tolerance = 1e-8;
};

// Names accepted by suite_checks, in their stable order.
const std::vector<std::string>& suite_names();
const std::vector<std::string>& hurwitz_subsuites();

// The checks of a suite, statically enumerated. "all" concatenates catalan, hurwitz, wkb, schur.
// Hurwitz sub-suites are addressed as "hurwitz.<name>". Throws UsageError for an unknown name.
std::vector<Check> suite_checks(const std::string& suite, const SuiteOptions& opts);

}  // namespace eo::cli
