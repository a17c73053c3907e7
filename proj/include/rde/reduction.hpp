#pragma once

#include <vector>

#include "rde/expansion.hpp"
#include "rde/shift_poly.hpp"

namespace rde::reduction {

using expansion::PolyMatrix;
using shift_poly::ShiftPoly;

struct ReducedSystem {
    PolyMatrix R;
    std::vector<int> support;  // 1-based columns with any nonzero entry
};

// SystemReduce: for each k >= 2 (index order) with zero self-coefficient,
// substitute row k into every row referencing column k, zeroing that column.
ReducedSystem system_reduce(const PolyMatrix& Q);

std::vector<int> support_columns(const PolyMatrix& m);

// One-variable case: A'x = B'x is annihilated by A' - B'.
ShiftPoly annihilator_1x1(const ShiftPoly& a, const ShiftPoly& b);

// Two-variable case: A'x = B'x + C'y, D'y = E'x + F'y is annihilated by
// (D' - F')(A' - B') - C'E'.
ShiftPoly annihilator_2x2(const ShiftPoly& a, const ShiftPoly& b, const ShiftPoly& c,
                          const ShiftPoly& d, const ShiftPoly& e, const ShiftPoly& f);

// Three-variable case: reduce x = Ax+By+Cz, y = Dx+Ey+Fz, z = Gx+Hy+Iz to the
// 2x2 case and dispatch to annihilator_2x2.
ShiftPoly annihilator_3x3(const ShiftPoly& a, const ShiftPoly& b, const ShiftPoly& c,
                          const ShiftPoly& d, const ShiftPoly& e, const ShiftPoly& f,
                          const ShiftPoly& g, const ShiftPoly& h, const ShiftPoly& i);

// General case: eliminate support variables (highest index first, scaling by
// 1 - A_nn) until at most three remain, then dispatch to the propositions.
// Returns an annihilator of every determinant family in the system.  Throws
// if the support exceeds support_cap or is empty.
ShiftPoly solve_identity_system(const ReducedSystem& rs, int support_cap = 16);

struct Fixture {
    ShiftPoly annihilator;
    int validity = 0;
};

// Hand-derived wheel denominator recurrence; the (-1)^n bookkeeping
// is outside the automated engine, so the result ships as a fixture.
Fixture wheel_denominator_fixture();

}  // namespace rde::reduction
