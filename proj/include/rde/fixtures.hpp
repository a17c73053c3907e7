#pragma once

#include <vector>

#include "rde/shift_poly.hpp"

namespace rde::fixtures {

using shift_poly::ShiftPoly;

// Published reference values used by --check and the acceptance suite.
// Annihilators are normalized (content 1, positive leading coefficient);
// palindromic cases compare identically in Y- and X-form.

ShiftPoly ladder_system_annihilator();  // (Y-1)(Y+1)(Y^4+1)(Y^4-4Y^2+1)^2
ShiftPoly ladder_minimal();             // (Y-1)(Y+1)(Y^4-4Y^2+1)^2
ShiftPoly ladder_stride2();             // (Y-1)(Y^4-4Y^2+1)^2

ShiftPoly path_annihilator();       // Y^2 - 2Y + 1
ShiftPoly path_num_minimal();       // (Y-1)^2
ShiftPoly path_den_minimal();       // Y-1

ShiftPoly two_tree_num_minimal();   // (X+1)(X^2-3X+1)^2
ShiftPoly two_tree_den_minimal();   // X^2-3X+1

ShiftPoly fan_annihilator();        // X^2-3X+1
ShiftPoly wheel_den_fixture();      // (X^2-3X+1)(X-1)

ShiftPoly three_tree_system_annihilator();
ShiftPoly three_tree_num_minimal();
ShiftPoly three_tree_den_minimal();

// First terms of the 3-tree numerator sequence h_8, h_9, ...
std::vector<Int> three_tree_numerator_heads();

// Reference ratio tables (asymptotic over exact) with the number of
// decimal places shown, for like-for-like digit comparison.
struct PrintedValue {
    double value;
    int decimals;
};
std::vector<PrintedValue> three_tree_num_ratio_table();  // n = 8..15
std::vector<PrintedValue> three_tree_den_ratio_table();  // n = 6..15

}  // namespace rde::fixtures
