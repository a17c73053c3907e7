#pragma once

#include <string>
#include <vector>

#include "rde/pipeline.hpp"

namespace rde::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;  // soft checks warn instead of failing the run
    std::string detail;
};

// Compares a completed run against the bundled reference fixtures for its
// family.  Families without fixtures yield an empty list.
std::vector<CheckResult> check_family(const pipeline::FamilyRun& run);

// True iff no hard check failed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rde::checks
