#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "rde/pipeline.hpp"

namespace rde::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json ledger_json(const expansion::ExpansionResult& exp);
nlohmann::json system_json(const expansion::PolyMatrix& m,
                           const std::vector<int>* support = nullptr);
nlohmann::json recurrence_json(const pipeline::FamilyRun& run);
nlohmann::json binet_json(const pipeline::FamilyRun& run);
std::string resistance_csv(const pipeline::FamilyRun& run);
std::string report_text(const pipeline::FamilyRun& run);

// Writes ledger.json, Q.json, R.json, recurrence.json, binet.json,
// resistance.csv and report.txt (those applicable to the executed stages)
// into out_dir, creating it if needed.
void write_run(const pipeline::FamilyRun& run, const std::string& out_dir);

}  // namespace rde::report
