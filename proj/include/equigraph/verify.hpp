#pragma once

#include <string>
#include <vector>

namespace equigraph {

struct Claim {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Claim> claims;

    bool passed() const;
    std::size_t failures() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named verification suite. Throws std::invalid_argument for an
/// unknown name.
SuiteReport run_suite(const std::string& name, unsigned jobs = 1);

}  // namespace equigraph
