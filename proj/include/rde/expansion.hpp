#pragma once

#include <vector>

#include "rde/families.hpp"
#include "rde/shift_poly.hpp"

namespace rde::expansion {

using families::FamilyHandle;
using families::HandlePtr;
using shift_poly::ShiftPoly;

// One row of the expansion ledger (the P matrix).
struct LedgerRow {
    int id = 0;       // family index (1-based)
    int pending = 0;  // 1 while the family still awaits expansion
    char mode = '0';  // 'R'/'C' for new families, '0' for alias rows
    int parent = 0;   // 0 for the root row
    int del_row = 0;
    int del_col = 0;
    ShiftPoly coeff;  // (-1)^(i+1) * entry * Y
};

using PolyMatrix = std::vector<std::vector<ShiftPoly>>;

struct ExpansionResult {
    std::vector<LedgerRow> ledger;
    std::vector<HandlePtr> families;  // families[i] has id i+1
    PolyMatrix Q;                     // Det(M(i)) = sum_j Q[i][j] Det(M(j))
    int min_size = 0;
};

// Iterated first-row/first-column Laplace expansion over matrix families.
// Deterministic: lowest-id pending family expands next; new families are
// deduplicated by sampled equality against previously seen ones.  Throws
// std::runtime_error if more than family_cap families appear (operational
// guard for the open convergence conjecture).
ExpansionResult laplace_expand(HandlePtr root, int min_size, int family_cap = 2048);

// Assembles Q from a completed ledger, accumulating coefficients when the
// same (parent, child) pair occurs from several cofactor positions.
PolyMatrix ledger_to_Q(const std::vector<LedgerRow>& ledger, int num_families);

// Aligned-text rendering of the ledger, for fixture diffing.
std::string ledger_text(const std::vector<LedgerRow>& ledger);

}  // namespace rde::expansion
