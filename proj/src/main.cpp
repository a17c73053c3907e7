#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "rde/checks.hpp"
#include "rde/pipeline.hpp"
#include "rde/report.hpp"

namespace {

int env_precision() {
    if (const char* v = std::getenv("RDE_PRECISION")) {
        int p = std::atoi(v);
        if (p >= 10) return p;
    }
    return 50;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rde: recurrences for determinant families via iterated Laplace expansion"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List built-in families");

    auto* run = app.add_subcommand("run", "Run the pipeline for one family");
    rde::pipeline::Config cfg;
    cfg.precision = env_precision();
    std::string stage_name = "all";
    std::string denom_name = "auto";
    std::string format = "text";
    std::string out_dir;
    bool check = false;

    run->add_option("--family", cfg.family, "Built-in family name or path to a JSON spec")
        ->required();
    run->add_option("--stages", stage_name, "Last stage to run")
        ->check(CLI::IsMember(
            {"expand", "reduce", "annihilate", "minimal", "binet", "resistance", "all"}));
    run->add_option("--denominator", denom_name, "Bapat denominator corner")
        ->check(CLI::IsMember({"first", "last", "auto"}));
    run->add_option("--min-size", cfg.min_size, "Expansion floor (0 = family default)");
    run->add_option("--family-cap", cfg.family_cap, "Abort if more families appear");
    run->add_option("--support-cap", cfg.support_cap, "Largest support the solver accepts");
    run->add_option("--precision", cfg.precision,
                    "Decimal digits for the binet stage (env RDE_PRECISION)");
    run->add_option("--sequence-length", cfg.sequence_length,
                    "Oracle sequence length (0 = automatic)");
    run->add_option("--resistance-max-n", cfg.resistance_max_n,
                    "Largest instance for the exact resistance table");
    run->add_option("--format", format, "Console output format")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", out_dir, "Directory for the full report bundle");
    run->add_flag("--check", check,
                  "Compare against the bundled fixtures; nonzero exit on a hard mismatch");

    CLI11_PARSE(app, argc, argv);

    if (*list) {
        for (const auto& name : rde::families::builtin_names()) std::cout << name << "\n";
        return 0;
    }

    static const std::map<std::string, rde::pipeline::Stage> stages{
        {"expand", rde::pipeline::Stage::expand},
        {"reduce", rde::pipeline::Stage::reduce},
        {"annihilate", rde::pipeline::Stage::annihilate},
        {"minimal", rde::pipeline::Stage::minimal},
        {"binet", rde::pipeline::Stage::binet},
        {"resistance", rde::pipeline::Stage::resistance},
        {"all", rde::pipeline::Stage::resistance}};
    cfg.last_stage = stages.at(stage_name);
    cfg.denom = denom_name == "first" ? rde::families::DenomChoice::first
                : denom_name == "last" ? rde::families::DenomChoice::last
                                       : rde::families::DenomChoice::auto_pick;

    try {
        rde::pipeline::FamilyRun result = rde::pipeline::run_family(cfg);

        if (format == "json") {
            nlohmann::json out{{"schema_version", rde::report::kSchemaVersion},
                               {"ledger", rde::report::ledger_json(result.num_exp)},
                               {"recurrence", rde::report::recurrence_json(result)}};
            if (result.num_bf) out["binet"] = rde::report::binet_json(result);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << rde::report::report_text(result);
        }
        if (!out_dir.empty()) rde::report::write_run(result, out_dir);

        if (check) {
            auto results = rde::checks::check_family(result);
            if (results.empty()) {
                std::cout << "check: no fixtures for family '" << result.spec->name << "'\n";
            }
            for (const auto& r : results) {
                const char* tag = r.pass ? "PASS" : (r.hard ? "FAIL" : "WARN");
                std::cout << "check: " << tag << "  " << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
            }
            if (!rde::checks::all_passed(results)) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
