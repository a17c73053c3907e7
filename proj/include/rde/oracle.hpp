#pragma once

#include "rde/families.hpp"
#include "rde/numeric.hpp"

namespace rde::oracle {

// Fraction-free (Bareiss) determinant with row pivoting; exact.
// The determinant of the empty matrix is 1.
Int det_exact(Matrix m);

// Exact effective resistance between nodes i and j (1-based) of the n-node
// member of the family: grounds node j, solves the grounded Laplacian for a
// unit current injected at i, and returns v_i - v_j.  Throws on i == j or a
// singular (disconnected) system.
Rat resistance_solve(const families::FamilySpec& spec, int n, int i, int j);

// Exact F_n / L_n (F_1 = F_2 = 1, L_1 = 1, L_2 = 3); used by the closed
// resistance formulas for the 2-tree, fan and wheel.
Int fibonacci(unsigned long n);
Int lucas(unsigned long n);

}  // namespace rde::oracle
