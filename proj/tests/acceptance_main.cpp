// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "rde/binet.hpp"
#include "rde/checks.hpp"
#include "rde/fixtures.hpp"
#include "rde/oracle.hpp"
#include "rde/pipeline.hpp"

using namespace rde;
using binet::Real;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& title, bool pass, const std::string& note = {}) {
    std::cout << "criterion " << criterion << " [" << (pass ? "PASS" : "FAIL") << "] " << title;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

pipeline::FamilyRun run(const std::string& family, double* seconds = nullptr,
                        pipeline::Stage last = pipeline::Stage::resistance) {
    pipeline::Config cfg;
    cfg.family = family;
    cfg.last_stage = last;
    auto t0 = Clock::now();
    auto r = pipeline::run_family(cfg);
    if (seconds)
        *seconds = std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0)
                       .count();
    return r;
}

bool checks_pass(const pipeline::FamilyRun& r, const std::vector<std::string>& names) {
    auto results = checks::check_family(r);
    for (const auto& want : names) {
        bool found = false;
        for (const auto& res : results)
            if (res.name == want) {
                found = true;
                if (!res.pass) return false;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace

int main() {
    // --- Criterion 1: ladder headline ------------------------------------
    double ladder_s = 0;
    auto ladder = run("ladder", &ladder_s);
    bool c1 = ladder.num_exp.ledger.size() == 22 && ladder.num_exp.Q.size() == 13 &&
              checks_pass(ladder, {"system annihilator", "numerator minimal",
                                   "numerator validity", "denominator minimal",
                                   "denominator validity", "stride-2 annihilator"}) &&
              ladder_s < 5.0;
    report(1, "ladder: 22-row ledger, 13x13 system, minimal annihilator "
              "(Y-1)(Y+1)(Y^4-4Y^2+1)^2 with validities 10/13, stride-2 form, < 5 s",
           c1, "runtime " + std::to_string(ladder_s) + " s");

    // --- Criterion 2: path and linear 2-tree ------------------------------
    auto path = run("path", nullptr, pipeline::Stage::minimal);
    bool path_r = true;
    auto path_spec = families::find_spec("path");
    for (int n = 3; n <= 50; ++n)
        if (binet::resistance_exact(path_spec, n) != Rat(n - 1)) path_r = false;
    auto two = run("linear2tree");
    bool c2 = path_r &&
              checks_pass(path, {"system annihilator", "numerator minimal",
                                 "denominator minimal"}) &&
              checks_pass(two, {"numerator minimal", "numerator validity", "denominator minimal",
                                "denominator validity",
                                "resistance closed form (n=6..25)"});
    report(2, "path r(1,n) = n-1 exactly for n = 3..50; 2-tree minimal annihilators with "
              "validities 7/5 and the closed resistance formula for n = 6..25",
           c2);

    // --- Criterion 3: fan and wheel ---------------------------------------
    auto fan = run("fan");
    auto wheel = run("wheel");
    bool c3 = checks_pass(fan, {"numerator minimal", "numerator validity", "denominator minimal",
                                "denominator validity",
                                "resistance Fibonacci product formula (k=5..20)"}) &&
              checks_pass(wheel, {"numerator minimal", "numerator validity",
                                  "denominator minimal (fixture)", "denominator validity",
                                  "resistance Fibonacci formula (k=5..20)"});
    report(3, "fan/wheel: X^2-3X+1 annihilators with validities 3/4, wheel denominator "
              "fixture (X^2-3X+1)(X-1) validity 6, Fibonacci formulas exact for k = 5..20",
           c3);

    // --- Criterion 4: linear 3-tree headline ------------------------------
    double tree_s = 0;
    auto tree = run("linear3tree", &tree_s);
    auto tree_checks = checks::check_family(tree);
    for (const auto& res : tree_checks)
        if (!res.hard && !res.pass)
            std::cout << "  warn: " << res.name << " (" << res.detail << ")\n";
    bool c4 = tree.num_red && tree.num_red->support.size() == 3 &&
              checks_pass(tree, {"system annihilator", "numerator minimal",
                                 "numerator validity", "denominator minimal",
                                 "denominator validity"}) &&
              tree_s < 60.0;
    report(4, "3-tree: reduced support has exactly 3 columns, system annihilator equals the "
              "reference degree-18 product, minimal annihilators with validities 18/10, < 60 s",
           c4, "runtime " + std::to_string(tree_s) + " s");

    // --- Criterion 5: 3-tree numerics -------------------------------------
    bool c5 = checks_pass(tree, {"numerator sequence h_8.. matches reference values",
                                 "dominant root 4.41948 (5 digits)", "C'_num1 0.816459",
                                 "C'_num2 0.0630896", "C'_den 0.199855",
                                 "numerator ratio table matches printed digits",
                                 "denominator ratio table matches printed digits"});
    report(5, "3-tree numerics: exact sequence head, dominant root to 5 digits, asymptotic "
              "constants to 6 digits at 50-digit precision, ratio tables to printed digits",
           c5);

    // --- Criterion 6: the 1/14 limit --------------------------------------
    bool c6 = checks_pass(tree, {"asymptotic successive differences within 1e-9 of 1/14",
                                 "exact deviations from 1/14: two-term running max decreasing"});
    report(6, "1/14 limit: |diff - 1/14| < 1e-9 for n in [40,60] (asymptotic forms); "
              "exact deviations for n in [25,40] converge with a strictly decreasing "
              "two-term running maximum",
           c6);

    // --- Criterion 7: property suites -------------------------------------
    // The exhaustive exact suites live in the unit test binary; rerun the
    // load-bearing ones here so this gate is self-contained.
    bool c7 = true;
    for (const auto& name : families::builtin_names()) {
        auto spec = families::find_spec(name);
        int step = spec->numerator_odd_truncate ? 2 : 1;
        int first = spec->min_size + (step == 2 && spec->min_size % 2 == 1 ? 1 : 0);
        for (int n = first; n <= 24; n += step) {
            Rat ratio = binet::resistance_exact(spec, n);
            if (ratio != oracle::resistance_solve(*spec, n, 1, n)) c7 = false;
            if (ratio != oracle::resistance_solve(*spec, n, n, 1)) c7 = false;
        }
    }
    for (const auto* r : {&ladder, &two, &fan, &wheel, &tree}) {
        if (!r->system_annihilator && r->spec->denom_strategy !=
                families::DenomStrategy::manual_fixture) c7 = false;
        if (r->num_min && r->system_annihilator &&
            !shift_poly::divides(r->num_min->annihilator, *r->system_annihilator)) c7 = false;
        if (r->num_min && !recurrence::hankel_minimal(r->num_min->annihilator, r->num_seq))
            c7 = false;
    }
    report(7, "property suites: resistance determinant-ratio/linear-solve agreement and "
              "symmetry for all built-ins, minimal-annihilator divisibility and Hankel "
              "minimality -- all exact, no tolerances",
           c7);

    // --- Criterion 8: scope statement -------------------------------------
    report(8, "symbolic radical closed forms are not reproduced; their high-precision "
              "numerical shadows (criteria 5-6) stand in",
           true);

    return failures == 0 ? 0 : 1;
}
