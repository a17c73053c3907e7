#pragma once

#include <vector>

#include "rde/families.hpp"
#include "rde/real.hpp"
#include "rde/recurrence.hpp"
#include "rde/shift_poly.hpp"

namespace rde::binet {

using shift_poly::CharPoly;
using shift_poly::ShiftPoly;

struct Root {
    Complex value;
    int mult = 1;
    bool is_real = false;
};

// Squarefree decomposition over Q (Yun): pairs (factor, multiplicity),
// factors primitive integer polynomials.
std::vector<std::pair<CharPoly, int>> squarefree_decomposition(const CharPoly& p);

// All roots of the characteristic polynomial of a Y-form annihilator, with
// multiplicities; real roots refined by sign-change bisection on the exact
// integer polynomial, complex roots by simultaneous (Durand-Kerner)
// iteration.  `digits` is the target decimal precision.
std::vector<Root> char_roots(const ShiftPoly& annihilator, int digits);

struct BinetForm {
    std::vector<Root> roots;
    // coeffs[i][j] multiplies n^j * roots[i]^n, 0 <= j < roots[i].mult.
    std::vector<std::vector<Complex>> coeffs;
    long start_shift = 0;  // index offset vs the raw determinant index
    long fit_from = 0;     // first index used in the confluent fit
    int precision_digits = 50;
};

// Solve the confluent Vandermonde system on deg consecutive exact terms
// starting at fit_from (absolute sequence index, must be >= the recurrence
// validity index).
BinetForm binet_fit(const recurrence::Recurrence& rec, const std::vector<Int>& seq, long start,
                    long fit_from, int digits);

Complex evaluate(const BinetForm& bf, long n);

struct Asymptotic {
    std::vector<std::size_t> dominant;  // indices into bf.roots; >1 on a modulus tie
    Real modulus;
};

Asymptotic asymptotic_form(const BinetForm& bf);

// Dominant-root truncation of the form at index n (real part).
Real evaluate_asymptotic(const BinetForm& bf, const Asymptotic& a, long n);

// Exact Bapat ratio r(1,n) for the n-node member of the family.
Rat resistance_exact(families::SpecPtr spec, int n);

}  // namespace rde::binet
