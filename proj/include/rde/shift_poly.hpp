#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rde/numeric.hpp"

namespace rde::shift_poly {

// Polynomial in the backward shift operator Y with exact integer
// coefficients, coeffs[i] = coefficient of Y^i.  Canonical form has no
// trailing zero coefficients; the zero polynomial is the empty list.
struct ShiftPoly {
    std::vector<Int> c;

    ShiftPoly() = default;
    ShiftPoly(std::initializer_list<long> coeffs);
    explicit ShiftPoly(std::vector<Int> coeffs);

    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    bool operator==(const ShiftPoly&) const = default;
};

// The X-form (characteristic polynomial) of an annihilator; same storage,
// coefficients reversed relative to the Y-form.
using CharPoly = ShiftPoly;

// Rational polynomials appear only as intermediates (division, recurrence
// detection); ascending coefficients, not kept canonical automatically.
using RatPoly = std::vector<Rat>;

ShiftPoly add(const ShiftPoly& a, const ShiftPoly& b);
ShiftPoly sub(const ShiftPoly& a, const ShiftPoly& b);
ShiftPoly neg(const ShiftPoly& a);
ShiftPoly mul(const ShiftPoly& a, const ShiftPoly& b);
ShiftPoly scale(const ShiftPoly& a, const Int& k);

// gcd of all coefficients (non-negative; 0 for the zero polynomial).
Int content(const ShiftPoly& a);
// Content 1, positive leading coefficient.
ShiftPoly normalized(const ShiftPoly& a);

// Division over Q: returns (quotient, remainder) with b != 0.
std::pair<RatPoly, RatPoly> divmod_q(const ShiftPoly& a, const ShiftPoly& b);
// Exact divisibility test over Q: returns the quotient iff a | b.
std::optional<RatPoly> divides(const ShiftPoly& a, const ShiftPoly& b);
// Exact division when the quotient is known to be an integer polynomial.
ShiftPoly exact_div(const ShiftPoly& a, const ShiftPoly& b);

RatPoly rat_trim(RatPoly p);
// Clear denominators and normalize to content 1, positive leading coeff.
ShiftPoly from_rational(const RatPoly& p);

// Action of the operator: sum_i a_i * seq[n - i]; seq[k] is stored at
// index k - start.  Requires n - degree(a) >= start.
Int apply(const ShiftPoly& a, const std::vector<Int>& seq, long start, long n);

// Y-form <-> X-form: coefficient reversal (involution on canonical forms).
CharPoly to_char(const ShiftPoly& a);
ShiftPoly from_char(const CharPoly& c);

std::string to_string(const ShiftPoly& a, char var = 'Y');
// Parses the to_string format back, bit exactly.  Throws on syntax errors.
ShiftPoly parse(const std::string& text, char var = 'Y');

}  // namespace rde::shift_poly
