#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "rde/numeric.hpp"

namespace rde::binet {

// Arbitrary-precision real; working precision is set per run via
// Real::default_precision (decimal digits).
using Real = boost::multiprecision::mpfr_float;

inline Real to_real(const Int& v) { return Real(v.get_mpz_t()); }
inline Real to_real(const Rat& v) { return Real(v.get_mpq_t()); }

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}
};

inline Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

inline Complex cpow(const Complex& base, long e) {
    Complex acc{Real(1), Real(0)};
    Complex b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

}  // namespace rde::binet
