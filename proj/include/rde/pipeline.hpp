#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rde/binet.hpp"
#include "rde/expansion.hpp"
#include "rde/families.hpp"
#include "rde/recurrence.hpp"
#include "rde/reduction.hpp"

namespace rde::pipeline {

using shift_poly::ShiftPoly;

enum class Stage { expand, reduce, annihilate, minimal, binet, resistance };

struct Config {
    std::string family = "ladder";     // built-in name or path to a JSON spec
    families::DenomChoice denom = families::DenomChoice::auto_pick;
    int min_size = 0;                  // 0 = family default
    int family_cap = 2048;
    int support_cap = 16;
    int precision = 50;                // decimal digits for the binet stage
    Stage last_stage = Stage::resistance;
    int sequence_length = 0;           // 0 = automatic
    int resistance_max_n = 30;
};

struct OneOver14Report {
    binet::Real r1;          // dominant root
    binet::Real c_num1, c_num2, c_den;  // C'_{num,1}, C'_{num,2}, C'_den
    // |(R(1,n+1) - R(1,n)) - 1/14| from the asymptotic forms, n = 40..60.
    std::vector<binet::Real> asym_deviation;
    // Exact successive differences R(1,n+1) - R(1,n), n = 25..40.
    std::vector<std::pair<int, Rat>> exact_diffs;
    // Asymptotic-over-exact ratio tables.
    std::vector<binet::Real> num_ratios;  // n = 8..15
    std::vector<binet::Real> den_ratios;  // n = 6..15
};

struct FamilyRun {
    families::SpecPtr spec;
    families::BapatHandles handles;
    int min_size = 0;

    expansion::ExpansionResult num_exp;
    std::optional<reduction::ReducedSystem> num_red;
    std::optional<ShiftPoly> system_annihilator;
    std::string annihilate_note;  // set when the solve stage is skipped

    std::optional<expansion::ExpansionResult> den_exp;  // separate-expand strategy
    std::optional<reduction::ReducedSystem> den_red;
    std::optional<ShiftPoly> den_annihilator;

    std::vector<Int> num_seq, den_seq;
    long num_start = 0, den_start = 0;
    std::optional<recurrence::Recurrence> num_min, den_min;
    std::optional<recurrence::SubsequenceResult> stride2;  // period-2 families

    std::optional<binet::BinetForm> num_bf, den_bf;
    std::optional<OneOver14Report> one_over_14;  // linear 3-tree only

    std::vector<std::pair<int, Rat>> resistance;  // (n, r(1,n))
};

// Runs the pipeline through cfg.last_stage.  Throws on unknown family.
FamilyRun run_family(const Config& cfg);

// Resolves a family argument: built-in name, else JSON file path.
families::SpecPtr resolve_spec(const std::string& family);

}  // namespace rde::pipeline
