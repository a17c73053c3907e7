#include "rde/binet.hpp"

#include <algorithm>
#include <stdexcept>

#include "rde/oracle.hpp"

namespace rde::binet {

using shift_poly::RatPoly;

namespace {

RatPoly to_rat(const ShiftPoly& p) {
    RatPoly r;
    for (const auto& x : p.c) r.emplace_back(x);
    return r;
}

RatPoly rp_trim(RatPoly p) { return shift_poly::rat_trim(std::move(p)); }

RatPoly rp_deriv(const RatPoly& p) {
    RatPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return rp_trim(std::move(r));
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return rp_trim(std::move(r));
}

std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw std::domain_error("rp_divmod: zero divisor");
    a = rp_trim(std::move(a));
    RatPoly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        std::size_t d = a.size() - b.size();
        q[d] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[d + i] -= f * b[i];
        a.pop_back();
        a = rp_trim(std::move(a));
    }
    return {std::move(q), std::move(a)};
}

RatPoly rp_monic(RatPoly p) {
    p = rp_trim(std::move(p));
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& x : p) x /= lead;
    return p;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    a = rp_trim(std::move(a));
    b = rp_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = rp_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(std::move(a));
}

RatPoly rp_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rp_divmod(a, b);
    if (!r.empty()) throw std::domain_error("rp_div: nonzero remainder");
    return q;
}

Real eval_real(const ShiftPoly& p, const Real& x) {
    Real acc(0);
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + to_real(p.c[i]);
    return acc;
}

Complex eval_complex(const ShiftPoly& p, const Complex& z) {
    Complex acc;
    for (std::size_t i = p.c.size(); i-- > 0;)
        acc = acc * z + Complex(to_real(p.c[i]), Real(0));
    return acc;
}

// Simultaneous (Durand-Kerner) iteration on a squarefree integer polynomial.
std::vector<Complex> durand_kerner(const CharPoly& f, int digits) {
    const int d = f.degree();
    std::vector<Complex> z(d);
    Real bound(1);
    for (int i = 0; i < d; ++i) {
        Real t = boost::multiprecision::abs(to_real(f.c[i]) / to_real(f.c[d]));
        if (t > bound) bound = t;
    }
    bound += 1;
    const Complex seed{Real("0.4"), Real("0.9")};
    Complex acc{Real(1), Real(0)};
    for (int i = 0; i < d; ++i) {
        acc = acc * seed;
        z[i] = Complex(bound, Real(0)) * acc;
    }
    Real tol = pow(Real(10), -(digits + 10));
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst(0);
        for (int i = 0; i < d; ++i) {
            Complex denom{Real(to_real(f.c[d])), Real(0)};
            for (int j = 0; j < d; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            Complex delta = eval_complex(f, z[i]) / denom;
            z[i] = z[i] - delta;
            Real a = abs(delta);
            if (a > worst) worst = a;
        }
        if (worst < tol) break;
    }
    return z;
}

// Sign-change bisection refinement of a simple real root near x0.
Real bisect_refine(const CharPoly& f, const Real& x0, int digits) {
    Real scale = boost::multiprecision::abs(x0);
    if (scale < 1) scale = 1;
    Real delta = scale * pow(Real(10), -6);
    Real lo = x0 - delta, hi = x0 + delta;
    Real flo = eval_real(f, lo), fhi = eval_real(f, hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) return x0;  // no bracket: keep the iterate
    Real width_target = scale * pow(Real(10), -(digits + 10));
    while (hi - lo > width_target) {
        Real mid = (lo + hi) / 2;
        Real fm = eval_real(f, mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace

std::vector<std::pair<CharPoly, int>> squarefree_decomposition(const CharPoly& p) {
    std::vector<std::pair<CharPoly, int>> out;
    if (p.degree() < 1) return out;
    RatPoly f = to_rat(p);
    RatPoly g = rp_gcd(f, rp_deriv(f));
    if (g.size() <= 1) {
        out.emplace_back(shift_poly::normalized(p), 1);
        return out;
    }
    RatPoly c = rp_div(f, g);
    RatPoly d = rp_sub(rp_div(rp_deriv(f), g), rp_deriv(c));
    int i = 1;
    while (c.size() > 1) {
        RatPoly a = rp_gcd(c, d);
        if (a.size() > 1) out.emplace_back(shift_poly::from_rational(a), i);
        c = rp_div(c, a);
        d = rp_sub(rp_div(d, a), rp_deriv(c));
        ++i;
    }
    return out;
}

std::vector<Root> char_roots(const ShiftPoly& annihilator, int digits) {
    Real::default_precision(digits + 25);
    CharPoly x = shift_poly::normalized(shift_poly::to_char(annihilator));
    std::vector<Root> roots;
    Real real_tol = pow(Real(10), -(digits / 2));
    for (const auto& [factor, mult] : squarefree_decomposition(x)) {
        for (Complex z : durand_kerner(factor, digits)) {
            Root r;
            r.mult = mult;
            if (boost::multiprecision::abs(z.im) < real_tol) {
                r.is_real = true;
                r.value = Complex(bisect_refine(factor, z.re, digits), Real(0));
            } else {
                r.value = z;
            }
            roots.push_back(std::move(r));
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        Real ma = abs(a.value), mb = abs(b.value);
        if (ma != mb) return ma > mb;
        if (a.value.re != b.value.re) return a.value.re > b.value.re;
        return a.value.im < b.value.im;
    });
    return roots;
}

BinetForm binet_fit(const recurrence::Recurrence& rec, const std::vector<Int>& seq, long start,
                    long fit_from, int digits) {
    Real::default_precision(digits + 25);
    BinetForm bf;
    bf.precision_digits = digits;
    bf.fit_from = fit_from;
    bf.roots = char_roots(rec.annihilator, digits);
    const int d = rec.annihilator.degree();
    if (fit_from < rec.validity_index)
        throw std::invalid_argument("binet_fit: fitting window before validity index");
    if (fit_from + d > start + static_cast<long>(seq.size()))
        throw std::invalid_argument("binet_fit: sequence too short for fitting window");

    // Confluent Vandermonde system in the basis n^j * r^n.
    std::vector<std::vector<Complex>> a(d, std::vector<Complex>(d));
    std::vector<Complex> b(d);
    for (int row = 0; row < d; ++row) {
        long n = fit_from + row;
        int col = 0;
        for (const auto& root : bf.roots) {
            Complex rn = cpow(root.value, n);
            Real npow(1);
            for (int j = 0; j < root.mult; ++j) {
                a[row][col++] = Complex(npow, Real(0)) * rn;
                npow *= Real(n);
            }
        }
        b[row] = Complex(to_real(seq[n - start]), Real(0));
    }
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        if (abs(a[k][k]) == 0) throw std::runtime_error("binet_fit: singular fit system");
        for (int i = k + 1; i < d; ++i) {
            Complex f = a[i][k] / a[k][k];
            for (int j = k; j < d; ++j) a[i][j] = a[i][j] - f * a[k][j];
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<Complex> sol(d);
    for (int k = d; k-- > 0;) {
        Complex s = b[k];
        for (int j = k + 1; j < d; ++j) s = s - a[k][j] * sol[j];
        sol[k] = s / a[k][k];
    }
    int col = 0;
    for (const auto& root : bf.roots) {
        std::vector<Complex> row;
        for (int j = 0; j < root.mult; ++j) row.push_back(sol[col++]);
        bf.coeffs.push_back(std::move(row));
    }
    return bf;
}

Complex evaluate(const BinetForm& bf, long n) {
    Complex total;
    for (std::size_t i = 0; i < bf.roots.size(); ++i) {
        Complex rn = cpow(bf.roots[i].value, n);
        Real npow(1);
        for (int j = 0; j < bf.roots[i].mult; ++j) {
            total = total + bf.coeffs[i][j] * Complex(npow, Real(0)) * rn;
            npow *= Real(n);
        }
    }
    return total;
}

Asymptotic asymptotic_form(const BinetForm& bf) {
    Asymptotic out;
    out.modulus = 0;
    for (const auto& r : bf.roots) {
        Real m = abs(r.value);
        if (m > out.modulus) out.modulus = m;
    }
    Real tol = out.modulus * pow(Real(10), -20);
    for (std::size_t i = 0; i < bf.roots.size(); ++i)
        if (out.modulus - abs(bf.roots[i].value) < tol) out.dominant.push_back(i);
    return out;
}

Real evaluate_asymptotic(const BinetForm& bf, const Asymptotic& a, long n) {
    Complex total;
    for (std::size_t i : a.dominant) {
        Complex rn = cpow(bf.roots[i].value, n);
        Real npow(1);
        for (int j = 0; j < bf.roots[i].mult; ++j) {
            total = total + bf.coeffs[i][j] * Complex(npow, Real(0)) * rn;
            npow *= Real(n);
        }
    }
    return total.re;
}

Rat resistance_exact(families::SpecPtr spec, int n) {
    if (n < spec->min_size)
        throw std::invalid_argument("resistance_exact: size below family minimum");
    auto handles = families::bapat_handles(spec);
    Int num = oracle::det_exact(handles.numerator->instantiate(n - 2));
    Int den = oracle::det_exact(handles.denominator->instantiate(n - 1));
    if (den == 0) throw std::domain_error("resistance_exact: zero denominator determinant");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace rde::binet
