#pragma once

// Named verification suites, each a bundle of identity checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cotm/report.hpp"

namespace cotm::verify {

struct SuiteConfig {
    int digits = 50;
    long n = 100000;               // series cutoff
    std::optional<double> tol;     // quadrature tolerance; default 10^{-(digits-10)}

    nlohmann::ordered_json to_json() const;
};

using Progress = std::function<void(const std::string&)>;

/// all, tables, closed-forms, consequences, gf, routes, h-reduction
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

VerificationReport tables_suite(const SuiteConfig& cfg);
VerificationReport gf_suite(const SuiteConfig& cfg);
VerificationReport closed_forms_suite(const SuiteConfig& cfg);
VerificationReport consequences_suite(const SuiteConfig& cfg);
VerificationReport routes_suite(const SuiteConfig& cfg, const Progress& progress = {});
VerificationReport h_reduction_suite(const SuiteConfig& cfg);

/// Runs the named suite (or every suite for "all") with checks sorted by id.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg,
                             const Progress& progress = {});

}  // namespace cotm::verify
