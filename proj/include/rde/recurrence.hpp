#pragma once

#include <vector>

#include "rde/families.hpp"
#include "rde/shift_poly.hpp"

namespace rde::recurrence {

using families::FamilyHandle;
using shift_poly::CharPoly;
using shift_poly::ShiftPoly;

struct Recurrence {
    ShiftPoly annihilator;  // normalized Y-form
    long validity_index = 0;
    long tested_from = 0;
    long tested_to = 0;
};

// Det(instantiate(h, n)) for n in [from, to]; index 0 is the empty minor
// with determinant 1.
std::vector<Int> oracle_sequence(const FamilyHandle& h, long from, long to);

// Minimal linear recurrence of a sequence window, exact over Q
// (Berlekamp-Massey); result normalized to Y-form with content 1.
ShiftPoly berlekamp_massey(const std::vector<Int>& window);

// Smallest v such that the operator's residual is zero for every tested
// n >= v (and at least start + degree).
long validity_index(const ShiftPoly& c, const std::vector<Int>& seq, long start);

// Data-driven candidate (Berlekamp-Massey on the
// sequence tail) + exact divisibility against the system annihilator A +
// the consecutive-kill premise.  Throws if the candidate fails division
// (sampled tail too short).
Recurrence minimal_annihilator(const ShiftPoly& a, const std::vector<Int>& seq, long start);

// Exact minimality certificate: the order-d Hankel matrix taken from the
// stationary tail is nonsingular, so no degree-(d-1) recurrence fits.
bool hankel_minimal(const ShiftPoly& c, const std::vector<Int>& seq);

// Resultant-based root-power map: characteristic polynomial whose roots are
// the s-th powers of the roots of x (multiplicities preserved); computed as
// Res_x(p(x), z - x^s) by fraction-free elimination over Z[z].
CharPoly root_power_char(const CharPoly& p, int stride);

struct SubsequenceResult {
    ShiftPoly full;      // root-power annihilator of the subsequence (Y-form)
    ShiftPoly original;  // divisor of C in the original variable still covering the minimal
    Recurrence minimal;  // minimal annihilator of the compressed subsequence
    std::vector<Int> subsequence;
    long sub_start = 0;
};

// Annihilator of the stride-s subsequence of seq (indices congruent to
// phase mod stride), per the Step 5 remark: exact root-power construction,
// then data-driven minimization.
SubsequenceResult subsequence_annihilator(const ShiftPoly& c, int stride,
                                          const std::vector<Int>& seq, long start,
                                          int phase = 0);

}  // namespace rde::recurrence
